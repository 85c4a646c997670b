#pragma once

// Deliberately naive reference implementations. None of them touch the face
// machinery, the solver or the search code they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgg/embedding.hpp"
#include "pgg/generators.hpp"

namespace brute {

using pgg::EdgeSet;
using pgg::PlanarEmbedding;

inline std::vector<std::size_t> degrees_in(const EdgeSet& s, const PlanarEmbedding& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (pgg::EdgeId e = 0; e < g.edge_count(); ++e) {
    if (s.contains(e)) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
  }
  return deg;
}

// Connected components of the subgraph spanned by `s`, counted over touched vertices.
inline std::size_t components_in(const EdgeSet& s, const PlanarEmbedding& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  std::set<std::size_t> touched;
  for (pgg::EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!s.contains(e)) continue;
    touched.insert(g.edge(e).u);
    touched.insert(g.edge(e).v);
    parent[find(g.edge(e).u)] = find(g.edge(e).v);
  }
  std::set<std::size_t> roots;
  for (std::size_t v : touched) roots.insert(find(v));
  return roots.size();
}

inline bool is_simple_cycle(const EdgeSet& s, const PlanarEmbedding& g) {
  if (s.size() < 3) return false;
  for (std::size_t d : degrees_in(s, g)) {
    if (d != 0 && d != 2) return false;
  }
  return components_in(s, g) == 1;
}

// Every simple cycle, by trying all 2^|E| subsets.
inline std::vector<EdgeSet> all_simple_cycles(const PlanarEmbedding& g) {
  std::vector<EdgeSet> out;
  const std::size_t m = g.edge_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet s(m);
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) s.insert(e);
    }
    if (is_simple_cycle(s, g)) out.push_back(s);
  }
  return out;
}

// Hamiltonicity by plain DFS over vertex paths from vertex 0.
inline bool hamiltonian(const PlanarEmbedding& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t depth) {
    if (depth == n) return std::find(adj[v].begin(), adj[v].end(), std::size_t{0}) != adj[v].end();
    for (std::size_t w : adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      if (go(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return go(0, 1);
}

// Does some subset of `values` sum to `target`? Plain 2^n loop.
inline std::vector<std::vector<std::size_t>> subset_sums(const std::vector<std::int64_t>& values, std::int64_t target) {
  std::vector<std::vector<std::size_t>> hits;
  const std::size_t n = values.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s += values[i];
    }
    if (s != target) continue;
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) in.push_back(i);
    }
    hits.push_back(std::move(in));
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

struct NaiveClaw {
  pgg::VertexId vertex;
  std::size_t incident;
  std::size_t d2;
};

inline std::vector<NaiveClaw> claws(const PlanarEmbedding& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<NaiveClaw> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t d2 = 0;
    for (const auto& e : g.edges()) {
      if (e.u == v && deg[e.v] == 2) ++d2;
      if (e.v == v && deg[e.u] == 2) ++d2;
    }
    if (deg[v] >= 3 && d2 >= 2) out.push_back({g.id(v), deg[v], d2});
  }
  std::sort(out.begin(), out.end(), [](const NaiveClaw& a, const NaiveClaw& b) { return a.vertex < b.vertex; });
  return out;
}

// Fixed polyominoes with exactly n cells: connected n-subsets of an n x n
// window (every n-omino fits), up to translation.
inline std::size_t fixed_polyomino_count(int n) {
  const int rows = n, cols = n;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<std::pair<int, int>> cur;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(cur.size()) == n) {
      std::set<std::pair<int, int>> cells(cur.begin(), cur.end());
      std::vector<std::pair<int, int>> stack{cur.front()};
      std::set<std::pair<int, int>> reach{cur.front()};
      while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          std::pair<int, int> nb{r + dr, c + dc};
          if (cells.count(nb) && !reach.count(nb)) {
            reach.insert(nb);
            stack.push_back(nb);
          }
        }
      }
      if (static_cast<int>(reach.size()) != n) return;
      int mr = rows, mc = cols;
      for (auto [r, c] : cur) {
        mr = std::min(mr, r);
        mc = std::min(mc, c);
      }
      std::vector<std::pair<int, int>> norm;
      for (auto [r, c] : cur) norm.push_back({r - mr, c - mc});
      std::sort(norm.begin(), norm.end());
      seen.insert(norm);
      return;
    }
    for (int k = from; k < rows * cols; ++k) {
      cur.push_back({k / cols, k % cols});
      choose(k + 1);
      cur.pop_back();
    }
  };
  choose(0);
  return seen.size();
}

// Random holed grids of at most 25 vertices, deterministic for a seed.
inline std::vector<PlanarEmbedding> random_holed_grids(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<PlanarEmbedding> out;
  while (out.size() < count) {
    const std::size_t rows = 4 + rng() % 2, cols = 4 + rng() % 2;
    std::vector<std::pair<int, int>> inner;
    for (int r = 1; r <= static_cast<int>(rows) - 3; ++r) {
      for (int c = 1; c <= static_cast<int>(cols) - 3; ++c) inner.push_back({r, c});
    }
    std::set<std::pair<int, int>> holes;
    for (const auto& cell : inner) {
      if (rng() % 2) holes.insert(cell);
    }
    try {
      out.push_back(pgg::gen_grid(rows, cols, holes));
    } catch (const std::exception&) {
      // disconnected draw; try again
    }
  }
  return out;
}

}  // namespace brute
