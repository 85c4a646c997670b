#include "pgg/structure.hpp"

#include <algorithm>

#include "pgg/error.hpp"

namespace pgg {

EdgeWeights edge_weights(const FaceBasis& basis, const PlanarEmbedding& g) {
  std::vector<int> w(g.edge_count(), 0);
  for (const Face& f : basis.faces) {
    f.edges.for_each([&](EdgeId e) { ++w[e]; });
  }
  for (EdgeId e = 0; e < w.size(); ++e) {
    if (w[e] > 2) {
      const Edge& ed = g.edge(e);
      throw InputError("edge " + std::to_string(g.id(ed.u)) + " " + std::to_string(g.id(ed.v)) + " lies on " +
                       std::to_string(w[e]) + " faces; the basis is not a tiling");
    }
  }
  return EdgeWeights(std::move(w));
}

std::string to_string(VertexClass::Tag t) {
  switch (t) {
    case VertexClass::Tag::Boundary:
      return "Boundary";
    case VertexClass::Tag::Interior:
      return "Interior";
    case VertexClass::Tag::Other:
      return "Other";
  }
  return "Other";
}

VertexClass classify_vertex(VertexIndex v, const FaceBasis& basis, const EdgeWeights& w, const PlanarEmbedding& g) {
  VertexClass c;
  c.cycles_on = basis.faces_on(v);
  std::size_t heavy = 0;
  bool all_le2 = true;
  for (EdgeId e : g.rotation(v)) {
    if (w[e] == 2) ++heavy;
    if (w[e] > 2) all_le2 = false;
  }
  const std::size_t deg = g.degree(v);
  if (deg > 0 && heavy == deg) {
    c.tag = VertexClass::Tag::Interior;
  } else if (all_le2 && !c.cycles_on.empty() && heavy == c.cycles_on.size() - 1) {
    c.tag = VertexClass::Tag::Boundary;
  }
  return c;
}

std::vector<VertexClass> classify_vertices(const FaceBasis& basis, const EdgeWeights& w, const PlanarEmbedding& g) {
  std::vector<VertexClass> out;
  out.reserve(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(classify_vertex(v, basis, w, g));
  return out;
}

std::vector<EdgeId> boundary_edges(const EdgeWeights& w) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < w.size(); ++e) {
    if (w[e] == 1) out.push_back(e);
  }
  return out;
}

std::string to_string(ClawReport::Severity s) { return s == ClawReport::Severity::CaseI ? "CaseI" : "CaseII"; }

std::vector<ClawReport> claw_d2_scan(const PlanarEmbedding& g) {
  std::vector<ClawReport> out;
  for (VertexIndex p = 0; p < g.vertex_count(); ++p) {
    if (g.degree(p) < 3) continue;
    std::size_t d2 = 0;
    for (EdgeId e : g.rotation(p)) {
      if (g.degree(g.other_end(e, p)) == 2) ++d2;
    }
    if (d2 < 2) continue;
    out.push_back(ClawReport{g.id(p), g.degree(p), d2,
                             d2 == 2 ? ClawReport::Severity::CaseI : ClawReport::Severity::CaseII});
  }
  std::sort(out.begin(), out.end(), [](const ClawReport& a, const ClawReport& b) { return a.vertex < b.vertex; });
  return out;
}

bool claw_free(const std::vector<ClawReport>& reports, ClawMode mode) {
  return std::none_of(reports.begin(), reports.end(), [&](const ClawReport& r) {
    return mode == ClawMode::Strict || r.severity == ClawReport::Severity::CaseII;
  });
}

namespace {

EdgeSet light_edges_of(const BasisGraph& bg, std::size_t position, const EdgeWeights& w) {
  EdgeSet out = bg.graph.empty_edge_set();
  bg.basis.faces.at(position).edges.for_each([&](EdgeId e) {
    if (w[e] == 1) out.insert(e);
  });
  return out;
}

}  // namespace

bool is_removable(const BasisGraph& bg, std::size_t position) {
  const EdgeWeights w = edge_weights(bg.basis, bg.graph);
  const EdgeSet doomed = light_edges_of(bg, position, w);
  for (VertexIndex v : bg.basis.faces.at(position).vertices) {
    const auto rot = bg.graph.rotation(v);
    if (std::all_of(rot.begin(), rot.end(), [&](EdgeId e) { return doomed.contains(e); })) return false;
  }
  return true;
}

BasisGraph remove_face_forced(const BasisGraph& bg, std::size_t position) {
  const EdgeWeights w = edge_weights(bg.basis, bg.graph);
  const EdgeSet doomed = light_edges_of(bg, position, w);
  PlanarEmbedding g = bg.graph.without_edges(doomed);
  FaceBasis rest;
  for (std::size_t i = 0; i < bg.basis.faces.size(); ++i) {
    if (i != position) rest.faces.push_back(bg.basis.faces[i]);
  }
  FaceBasis basis = remap_faces(rest, bg.graph, g);
  return BasisGraph{std::move(g), std::move(basis)};
}

BasisGraph remove_face(const BasisGraph& bg, std::size_t position) {
  if (!is_removable(bg, position)) {
    throw RemovalError("face " + std::to_string(bg.basis.faces.at(position).id) + " is not removable");
  }
  return remove_face_forced(bg, position);
}

}  // namespace pgg
