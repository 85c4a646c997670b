#include "pgg/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "pgg/error.hpp"

namespace pgg {

namespace {

Polyomino normalized(Polyomino p) {
  int mr = p.front().r, mc = p.front().c;
  for (const Cell& c : p) {
    mr = std::min(mr, c.r);
    mc = std::min(mc, c.c);
  }
  for (Cell& c : p) {
    c.r -= mr;
    c.c -= mc;
  }
  std::sort(p.begin(), p.end());
  return p;
}

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

PlanarEmbedding from_points(std::string name, const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& e,
                            int width) {
  std::vector<Vertex> vs;
  for (const Point& p : pts) vs.push_back({p.y * width + p.x, p});
  Pairs pairs;
  for (auto [a, b] : e) pairs.emplace_back(vs[a].id, vs[b].id);
  return PlanarEmbedding::build(std::move(name), std::move(vs), pairs);
}

}  // namespace

PlanarEmbedding lattice_graph(std::span<const Cell> cells, std::string name) {
  if (cells.empty()) throw InputError("no cells");
  int maxc = 0;
  for (const Cell& c : cells) {
    if (c.r < 0 || c.c < 0) throw InputError("negative cell coordinate");
    maxc = std::max(maxc, c.c);
  }
  const VertexId width = maxc + 2;
  std::map<std::pair<int, int>, Point> pts;  // keyed by (y, x) for row-major order
  std::set<std::pair<VertexId, VertexId>> edges;
  auto id = [&](int x, int y) { return static_cast<VertexId>(y) * width + x; };
  for (const Cell& c : cells) {
    const int x = c.c, y = c.r;
    for (auto [dx, dy] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) pts[{y + dy, x + dx}] = Point{x + dx, y + dy};
    edges.insert({id(x, y), id(x + 1, y)});
    edges.insert({id(x, y + 1), id(x + 1, y + 1)});
    edges.insert({id(x, y), id(x, y + 1)});
    edges.insert({id(x + 1, y), id(x + 1, y + 1)});
  }
  std::vector<Vertex> vs;
  for (const auto& [key, p] : pts) vs.push_back({id(static_cast<int>(p.x), static_cast<int>(p.y)), p});
  Pairs pairs(edges.begin(), edges.end());
  try {
    return PlanarEmbedding::build(std::move(name), std::move(vs), pairs);
  } catch (const ParseError& e) {
    if (e.kind() == ParseError::Kind::Disconnected) throw InputError("cells do not form a connected graph");
    throw;
  }
}

PlanarEmbedding gen_grid(std::size_t rows, std::size_t cols, const std::set<std::pair<int, int>>& holes) {
  if (rows < 2 || cols < 2) throw InputError("grid needs at least 2 x 2 vertices");
  for (auto [r, c] : holes) {
    if (r < 1 || c < 1 || r > static_cast<int>(rows) - 3 || c > static_cast<int>(cols) - 3) {
      throw InputError("hole (" + std::to_string(r) + "," + std::to_string(c) +
                       ") is not strictly inside the cell rectangle");
    }
  }
  std::vector<Cell> cells;
  for (int r = 0; r + 1 < static_cast<int>(rows); ++r) {
    for (int c = 0; c + 1 < static_cast<int>(cols); ++c) {
      if (!holes.count({r, c})) cells.push_back({r, c});
    }
  }
  std::string name = "grid" + std::to_string(rows) + "x" + std::to_string(cols);
  for (auto [r, c] : holes) name += "-h" + std::to_string(r) + "_" + std::to_string(c);
  return lattice_graph(cells, std::move(name));
}

std::vector<Polyomino> enumerate_polyominoes(std::size_t max_cells) {
  if (max_cells > kMaxPolyominoCells) {
    throw InputError("polyomino enumeration is capped at " + std::to_string(kMaxPolyominoCells) + " cells");
  }
  std::vector<Polyomino> out;
  if (max_cells == 0) return out;
  std::set<Polyomino> level{Polyomino{{0, 0}}};
  for (std::size_t size = 1;; ++size) {
    out.insert(out.end(), level.begin(), level.end());
    if (size == max_cells) break;
    std::set<Polyomino> next;
    for (const Polyomino& p : level) {
      const std::set<Cell> have(p.begin(), p.end());
      for (const Cell& c : p) {
        for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          const Cell n{c.r + dr, c.c + dc};
          if (have.count(n)) continue;
          Polyomino q = p;
          q.push_back(n);
          next.insert(normalized(std::move(q)));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::string polyomino_id(const Polyomino& p, std::size_t index_within_size) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "p%zu-%02zu", p.size(), index_within_size);
  return buf;
}

void for_each_polyomino_graph(std::size_t max_cells,
                              const std::function<void(const std::string&, const PlanarEmbedding&)>& fn) {
  std::size_t size = 0, index = 0;
  for (const Polyomino& p : enumerate_polyominoes(max_cells)) {
    if (p.size() != size) {
      size = p.size();
      index = 0;
    }
    const std::string id = polyomino_id(p, index++);
    fn(id, lattice_graph(p, id));
  }
}

namespace fixtures {

PlanarEmbedding square() { return gen_grid(2, 2); }
PlanarEmbedding domino() { return lattice_graph(std::vector<Cell>{{0, 0}, {0, 1}}, "domino"); }
PlanarEmbedding grid3() { return gen_grid(3, 3); }
PlanarEmbedding grid4() { return gen_grid(4, 4); }
PlanarEmbedding fig8() { return lattice_graph(std::vector<Cell>{{0, 0}, {1, 1}}, "fig8"); }

PlanarEmbedding strip() {
  std::vector<Cell> cells;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 5; ++c) cells.push_back({r, c});
  }
  return lattice_graph(cells, "strip");
}

namespace {

// Octagon on the 3 x 3 lattice square at x0 with a center on three spokes.
// mirror = true reflects it so the hexagon sits on the right.
void add_fan(std::vector<Point>& pts, std::vector<std::pair<int, int>>& edges, int x0, bool mirror) {
  const int base = static_cast<int>(pts.size());
  auto X = [&](int x) { return mirror ? x0 + 2 - x : x0 + x; };
  const std::vector<std::pair<int, int>> ring{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  for (auto [x, y] : ring) pts.push_back({X(x), y});
  pts.push_back({X(1), 1});
  const int center = base + 8;
  for (int i = 0; i < 8; ++i) edges.emplace_back(base + i, base + (i + 1) % 8);
  for (int spoke : {1, 2, 5}) edges.emplace_back(center, base + spoke);
}

}  // namespace

PlanarEmbedding fan9() {
  std::vector<Point> pts;
  std::vector<std::pair<int, int>> edges;
  add_fan(pts, edges, 0, false);
  return from_points("fan9", pts, edges, 3);
}

PlanarEmbedding twin9() {
  std::vector<Point> pts;
  std::vector<std::pair<int, int>> edges;
  add_fan(pts, edges, 0, false);
  add_fan(pts, edges, 3, true);
  // ring index 2 is (2,0) / (3,0); ring index 3 is (2,1) / (3,1)
  edges.emplace_back(2, 9 + 2);
  edges.emplace_back(3, 9 + 3);
  return from_points("twin9", pts, edges, 6);
}

}  // namespace fixtures

}  // namespace pgg
