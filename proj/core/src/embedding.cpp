#include "pgg/embedding.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "pgg/error.hpp"

namespace pgg {

namespace detail {
struct EmbeddingAccess {
  static PlanarEmbedding assemble(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges) {
    return PlanarEmbedding::assemble(std::move(name), std::move(vertices), std::move(edges));
  }
};
}  // namespace detail

namespace {

using Kind = ParseError::Kind;

std::uint64_t pair_key(VertexIndex a, VertexIndex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// Counterclockwise from the positive x axis.
bool angle_less(Point da, Point db) {
  auto half = [](Point d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  const int ha = half(da), hb = half(db);
  if (ha != hb) return ha < hb;
  return orientation(Point{0, 0}, da, db) > 0;
}

struct RawEdge {
  VertexId u, v;
  std::size_t line;
};

// Shared by the reader and by PlanarEmbedding::build. Line numbers are 0 for
// programmatic input.
PlanarEmbedding validate_and_assemble(std::string name, std::vector<Vertex> vertices,
                                      const std::vector<std::size_t>& vertex_lines,
                                      const std::vector<RawEdge>& raw) {
  std::unordered_map<VertexId, VertexIndex> index;
  std::vector<std::pair<Point, VertexIndex>> by_pos;
  for (VertexIndex i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i].id, i).second) {
      throw ParseError(Kind::DuplicateVertex, vertex_lines[i],
                       "duplicate vertex id " + std::to_string(vertices[i].id));
    }
    by_pos.emplace_back(vertices[i].pos, i);
  }
  std::sort(by_pos.begin(), by_pos.end(), [](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  });
  for (std::size_t i = 1; i < by_pos.size(); ++i) {
    if (by_pos[i].first == by_pos[i - 1].first) {
      const VertexIndex later = std::max(by_pos[i].second, by_pos[i - 1].second);
      throw ParseError(Kind::CoincidentVertices, vertex_lines[later],
                       "vertex " + std::to_string(vertices[later].id) + " coincides with another vertex");
    }
  }

  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, EdgeId> seen;
  for (const RawEdge& r : raw) {
    auto iu = index.find(r.u);
    auto iv = index.find(r.v);
    if (iu == index.end() || iv == index.end()) {
      const VertexId missing = iu == index.end() ? r.u : r.v;
      throw ParseError(Kind::UnknownVertex, r.line, "unknown vertex " + std::to_string(missing));
    }
    if (iu->second == iv->second) {
      throw ParseError(Kind::SelfLoop, r.line, "self-loop at vertex " + std::to_string(r.u));
    }
    if (!seen.emplace(pair_key(iu->second, iv->second), edges.size()).second) {
      throw ParseError(Kind::DuplicateEdge, r.line,
                       "duplicate edge " + std::to_string(r.u) + " " + std::to_string(r.v));
    }
    edges.push_back(Edge{iu->second, iv->second});
  }

  for (std::size_t j = 0; j < edges.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      const Point pa = vertices[a.u].pos, qa = vertices[a.v].pos;
      const Point pb = vertices[b.u].pos, qb = vertices[b.v].pos;
      bool bad = false;
      if (a.u == b.u) bad = segments_overlap_at(pa, qa, qb);
      else if (a.u == b.v) bad = segments_overlap_at(pa, qa, pb);
      else if (a.v == b.u) bad = segments_overlap_at(qa, pa, qb);
      else if (a.v == b.v) bad = segments_overlap_at(qa, pa, pb);
      else bad = segments_touch(pa, qa, pb, qb);
      if (bad) {
        throw ParseError(Kind::CrossingEdges, raw[j].line,
                         "edge " + std::to_string(raw[j].u) + " " + std::to_string(raw[j].v) + " crosses edge " +
                             std::to_string(raw[i].u) + " " + std::to_string(raw[i].v));
      }
    }
  }

  PlanarEmbedding g = detail::EmbeddingAccess::assemble(std::move(name), std::move(vertices), std::move(edges));
  if (!g.is_connected()) {
    // Blame the first vertex that is unreachable from vertex 0.
    std::vector<bool> reached(g.vertex_count(), false);
    std::vector<VertexIndex> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.rotation(v)) {
        const VertexIndex w = g.other_end(e, v);
        if (!reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
      }
    }
    const auto it = std::find(reached.begin(), reached.end(), false);
    const auto v = static_cast<VertexIndex>(it - reached.begin());
    throw ParseError(Kind::Disconnected, vertex_lines[v],
                     "graph is disconnected: vertex " + std::to_string(g.id(v)) + " is unreachable");
  }
  return g;
}

}  // namespace

PlanarEmbedding PlanarEmbedding::assemble(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges) {
  PlanarEmbedding g;
  g.name_ = std::move(name);
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.rotation_.assign(g.vertices_.size(), {});
  for (VertexIndex i = 0; i < g.vertices_.size(); ++i) g.index_.emplace(g.vertices_[i].id, i);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const Edge& ed = g.edges_[e];
    g.edge_index_.emplace(pair_key(ed.u, ed.v), e);
    g.rotation_[ed.u].push_back(e);
    g.rotation_[ed.v].push_back(e);
  }
  for (VertexIndex v = 0; v < g.vertices_.size(); ++v) {
    const Point o = g.vertices_[v].pos;
    auto dir = [&](EdgeId e) {
      const Point p = g.vertices_[g.other_end(e, v)].pos;
      return Point{p.x - o.x, p.y - o.y};
    };
    std::sort(g.rotation_[v].begin(), g.rotation_[v].end(),
              [&](EdgeId a, EdgeId b) { return angle_less(dir(a), dir(b)); });
  }
  return g;
}

PlanarEmbedding PlanarEmbedding::build(std::string name, std::vector<Vertex> vertices,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::size_t> lines(vertices.size(), 0);
  std::vector<RawEdge> raw;
  raw.reserve(edges.size());
  for (const auto& [u, v] : edges) raw.push_back(RawEdge{u, v, 0});
  if (vertices.empty()) throw ParseError(Kind::Syntax, 0, "graph has no vertices");
  return validate_and_assemble(std::move(name), std::move(vertices), lines, raw);
}

std::optional<VertexIndex> PlanarEmbedding::index_of(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex PlanarEmbedding::index_of_checked(VertexId id) const {
  auto idx = index_of(id);
  if (!idx) throw InputError("unknown vertex " + std::to_string(id));
  return *idx;
}

std::optional<EdgeId> PlanarEmbedding::edge_between(VertexIndex a, VertexIndex b) const {
  auto it = edge_index_.find(pair_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeSet PlanarEmbedding::all_edges() const {
  EdgeSet s(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) s.insert(e);
  return s;
}

bool PlanarEmbedding::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> reached(vertices_.size(), false);
  std::vector<VertexIndex> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeId e : rotation_[v]) {
      const VertexIndex w = other_end(e, v);
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertices_.size();
}

PlanarEmbedding PlanarEmbedding::without_edges(const EdgeSet& removed,
                                               std::vector<std::optional<EdgeId>>* edge_map) const {
  std::vector<Edge> kept;
  if (edge_map) edge_map->assign(edges_.size(), std::nullopt);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (removed.contains(e)) continue;
    if (edge_map) (*edge_map)[e] = kept.size();
    kept.push_back(edges_[e]);
  }
  return assemble(name_, vertices_, std::move(kept));
}

PlanarEmbedding PlanarEmbedding::edge_subgraph(const EdgeSet& kept, std::string name) const {
  std::vector<bool> used(vertices_.size(), false);
  kept.for_each([&](EdgeId e) {
    used[edges_[e].u] = true;
    used[edges_[e].v] = true;
  });
  std::vector<VertexIndex> remap(vertices_.size(), 0);
  std::vector<Vertex> vs;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = vs.size();
    vs.push_back(vertices_[v]);
  }
  std::vector<Edge> es;
  kept.for_each([&](EdgeId e) { es.push_back(Edge{remap[edges_[e].u], remap[edges_[e].v]}); });
  return assemble(std::move(name), std::move(vs), std::move(es));
}

PlanarEmbedding PlanarEmbedding::relabeled(std::span<const VertexId> new_ids) const {
  if (new_ids.size() != vertices_.size()) throw std::invalid_argument("relabeled: id count mismatch");
  std::vector<Vertex> vs = vertices_;
  for (VertexIndex v = 0; v < vs.size(); ++v) vs[v].id = new_ids[v];
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const Edge& e : edges_) es.emplace_back(new_ids[e.u], new_ids[e.v]);
  return build(name_, std::move(vs), es);
}

PlanarEmbedding parse_pgg(std::istream& in) {
  std::string name;
  bool have_graph = false;
  std::vector<Vertex> vertices;
  std::vector<std::size_t> vertex_lines;
  std::vector<RawEdge> raw;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;

    auto expect_end = [&] {
      std::string extra;
      if (ss >> extra) throw ParseError(Kind::Syntax, lineno, "unexpected token '" + extra + "'");
    };

    if (keyword == "graph") {
      if (have_graph) throw ParseError(Kind::Syntax, lineno, "second 'graph' line");
      if (!(ss >> name)) throw ParseError(Kind::Syntax, lineno, "'graph' needs a name");
      expect_end();
      have_graph = true;
      continue;
    }
    if (!have_graph) throw ParseError(Kind::MissingGraphLine, lineno, "expected 'graph <name>' first");

    if (keyword == "vertex") {
      Vertex v;
      if (!(ss >> v.id >> v.pos.x >> v.pos.y)) {
        throw ParseError(Kind::Syntax, lineno, "expected 'vertex <id> <x> <y>'");
      }
      expect_end();
      vertices.push_back(v);
      vertex_lines.push_back(lineno);
    } else if (keyword == "edge") {
      RawEdge r{0, 0, lineno};
      if (!(ss >> r.u >> r.v)) throw ParseError(Kind::Syntax, lineno, "expected 'edge <u> <v>'");
      expect_end();
      raw.push_back(r);
    } else {
      throw ParseError(Kind::Syntax, lineno, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_graph) throw ParseError(Kind::MissingGraphLine, lineno, "missing 'graph <name>' line");
  if (vertices.empty()) throw ParseError(Kind::Syntax, lineno, "graph has no vertices");
  return validate_and_assemble(std::move(name), std::move(vertices), vertex_lines, raw);
}

PlanarEmbedding parse_pgg(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_pgg(in);
}

PlanarEmbedding load_pgg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_pgg(in);
}

std::string to_pgg(const PlanarEmbedding& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "unnamed" : g.name()) << '\n';
  for (const Vertex& v : g.vertices()) out << "vertex " << v.id << ' ' << v.pos.x << ' ' << v.pos.y << '\n';
  for (const Edge& e : g.edges()) out << "edge " << g.id(e.u) << ' ' << g.id(e.v) << '\n';
  return out.str();
}

}  // namespace pgg
