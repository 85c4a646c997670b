#include "pgg/faces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pgg/cycles.hpp"
#include "pgg/error.hpp"
#include "pgg/geometry.hpp"

namespace pgg {
namespace {

// Half-edge h = 2e + d runs u->v for d = 0 and v->u for d = 1.
VertexIndex tail(const PlanarEmbedding& g, std::size_t h) {
  const Edge& e = g.edge(h / 2);
  return (h & 1) ? e.v : e.u;
}

VertexIndex head(const PlanarEmbedding& g, std::size_t h) {
  const Edge& e = g.edge(h / 2);
  return (h & 1) ? e.u : e.v;
}

std::size_t half_from(const PlanarEmbedding& g, EdgeId e, VertexIndex from) {
  return 2 * e + (g.edge(e).u == from ? 0 : 1);
}

std::vector<Point> polygon_of(const std::vector<VertexIndex>& vs, const PlanarEmbedding& g) {
  std::vector<Point> poly;
  poly.reserve(vs.size());
  for (VertexIndex v : vs) poly.push_back(g.pos(v));
  return poly;
}

}  // namespace

bool Face::has_vertex(VertexIndex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::optional<std::size_t> FaceBasis::position_of(int id) const {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<int> FaceBasis::ids() const {
  std::vector<int> out;
  out.reserve(faces.size());
  for (const Face& f : faces) out.push_back(f.id);
  return out;
}

std::vector<std::size_t> FaceBasis::faces_on(VertexIndex v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].has_vertex(v)) out.push_back(i);
  }
  return out;
}

FaceBasis trace_faces(const PlanarEmbedding& g) {
  const std::size_t halves = 2 * g.edge_count();
  // slot[h]: position of h's edge in the rotation of tail(h).
  std::vector<std::size_t> slot(halves, 0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto rot = g.rotation(v);
    for (std::size_t k = 0; k < rot.size(); ++k) slot[half_from(g, rot[k], v)] = k;
  }
  auto next = [&](std::size_t h) {
    const VertexIndex v = head(g, h);
    const auto rot = g.rotation(v);
    const std::size_t k = slot[h ^ 1];
    const EdgeId e = rot[(k + rot.size() - 1) % rot.size()];
    return half_from(g, e, v);
  };

  std::vector<std::size_t> order(halves);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ka = std::pair{g.id(tail(g, a)), g.id(head(g, a))};
    const auto kb = std::pair{g.id(tail(g, b)), g.id(head(g, b))};
    return ka < kb;
  });

  FaceBasis basis;
  std::vector<bool> visited(halves, false);
  int next_id = 0;
  for (std::size_t start : order) {
    if (visited[start]) continue;
    std::vector<VertexIndex> walk;
    EdgeSet edges(g.edge_count());
    std::size_t h = start;
    do {
      visited[h] = true;
      walk.push_back(tail(g, h));
      edges.flip(h / 2);
      h = next(h);
    } while (h != start);

    const auto poly = polygon_of(walk, g);
    if (doubled_area(poly) > 0) {
      std::vector<VertexIndex> sorted = walk;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("bounded face through vertex " + std::to_string(g.id(walk.front())) +
                         " is not a simple polygon");
      }
      basis.faces.push_back(Face{next_id++, std::move(walk), std::move(edges)});
    } else {
      if (basis.outer) throw std::logic_error("trace_faces: more than one unbounded face");
      // Edges walked twice (bridges) cancelled out of the GF(2) set; keep them.
      EdgeSet all(g.edge_count());
      for (std::size_t i = 0; i < walk.size(); ++i) {
        if (auto e = g.edge_between(walk[i], walk[(i + 1) % walk.size()])) all.insert(*e);
      }
      basis.outer = OuterFace{std::move(walk), std::move(all)};
    }
  }
  return basis;
}

BasisGraph with_traced_faces(PlanarEmbedding g) {
  FaceBasis b = trace_faces(g);
  return BasisGraph{std::move(g), std::move(b)};
}

std::vector<VertexIndex> cycle_vertices(const EdgeSet& cycle, const PlanarEmbedding& g) {
  const CycleClass c = classify_edge_set(cycle, g);
  if (c.kind != CycleClass::Kind::SingleCycle) throw std::invalid_argument("cycle_vertices: not a single cycle");
  const auto ids = cycle.ids();
  const Edge& first = g.edge(ids.front());
  VertexIndex start = std::min(first.u, first.v);
  std::vector<VertexIndex> out{start};
  EdgeId came = ids.front();
  VertexIndex cur = g.other_end(came, start);
  while (cur != start) {
    out.push_back(cur);
    for (EdgeId e : g.rotation(cur)) {
      if (e != came && cycle.contains(e)) {
        came = e;
        break;
      }
    }
    cur = g.other_end(came, cur);
  }
  return out;
}

std::vector<std::size_t> enclosed_faces(const EdgeSet& cycle, const FaceBasis& basis, const PlanarEmbedding& g) {
  const auto poly = polygon_of(cycle_vertices(cycle, g), g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.faces.size(); ++i) {
    const auto face_poly = polygon_of(basis.faces[i].vertices, g);
    switch (locate(interior_point(face_poly), poly)) {
      case Containment::Inside:
        out.push_back(i);
        break;
      case Containment::Outside:
        break;
      case Containment::Boundary:
        throw std::logic_error("enclosed_faces: face interior point lies on the cycle");
    }
  }
  return out;
}

FaceBasis remap_faces(const FaceBasis& basis, const PlanarEmbedding& g_old, const PlanarEmbedding& g_new) {
  FaceBasis out;
  out.faces.reserve(basis.faces.size());
  for (const Face& f : basis.faces) {
    Face nf{f.id, {}, EdgeSet(g_new.edge_count())};
    nf.vertices.reserve(f.vertices.size());
    for (VertexIndex v : f.vertices) nf.vertices.push_back(g_new.index_of_checked(g_old.id(v)));
    for (std::size_t i = 0; i < nf.vertices.size(); ++i) {
      auto e = g_new.edge_between(nf.vertices[i], nf.vertices[(i + 1) % nf.vertices.size()]);
      if (!e) throw std::logic_error("remap_faces: face edge missing from target graph");
      nf.edges.insert(*e);
    }
    out.faces.push_back(std::move(nf));
  }
  return out;
}

BasisGraph extract_faces(const BasisGraph& bg, std::span<const std::size_t> positions, std::string name) {
  EdgeSet kept = bg.graph.empty_edge_set();
  FaceBasis chosen;
  for (std::size_t p : positions) {
    bg.basis.faces.at(p).edges.for_each([&](EdgeId e) { kept.insert(e); });
    chosen.faces.push_back(bg.basis.faces[p]);
  }
  PlanarEmbedding sub = bg.graph.edge_subgraph(kept, std::move(name));
  FaceBasis basis = remap_faces(chosen, bg.graph, sub);
  return BasisGraph{std::move(sub), std::move(basis)};
}

}  // namespace pgg
