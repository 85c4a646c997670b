#include "pgg/oracle.hpp"

#include <vector>

namespace pgg {

namespace {

enum class EdgeState : std::uint8_t { Unknown, In, Out };

struct State {
  std::vector<EdgeState> edge;
  std::vector<std::uint32_t> in_deg;
  std::vector<std::uint32_t> avail;    // In + Unknown incident edges
  std::vector<VertexIndex> partner;    // other end of the path through a vertex of in-degree <= 1
  std::size_t in_count = 0;
  bool closed = false;
};

class Search {
 public:
  Search(const PlanarEmbedding& g, std::uint64_t budget) : g_(g), n_(g.vertex_count()), budget_(budget) {}

  OracleResult run() {
    OracleResult r;
    if (n_ < 3) return r;
    State s;
    s.edge.assign(g_.edge_count(), EdgeState::Unknown);
    s.in_deg.assign(n_, 0);
    s.avail.resize(n_);
    s.partner.resize(n_);
    for (VertexIndex v = 0; v < n_; ++v) {
      s.avail[v] = static_cast<std::uint32_t>(g_.degree(v));
      s.partner[v] = v;
    }
    for (VertexIndex v = 0; v < n_; ++v) queue_.push_back(v);
    if (propagate(s) && connected(s)) dfs(s);

    r.nodes_explored = nodes_;
    r.timed_out = aborted_ && !solution_;
    r.found = std::move(solution_);
    return r;
  }

 private:
  bool set_in(State& s, EdgeId e) {
    if (s.edge[e] == EdgeState::In) return true;
    if (s.edge[e] == EdgeState::Out || s.closed) return false;
    const VertexIndex a = g_.edge(e).u, b = g_.edge(e).v;
    if (s.in_deg[a] >= 2 || s.in_deg[b] >= 2) return false;
    s.edge[e] = EdgeState::In;
    const VertexIndex pa = s.partner[a], pb = s.partner[b];
    ++s.in_deg[a];
    ++s.in_deg[b];
    ++s.in_count;
    if (pa == b) {
      if (s.in_count != n_) return false;  // cycle short of a Hamilton cycle
      s.closed = true;
    } else {
      s.partner[pa] = pb;
      s.partner[pb] = pa;
      if (s.in_count + 1 < n_) {
        if (auto closing = g_.edge_between(pa, pb)) {
          if (s.edge[*closing] == EdgeState::Unknown && !set_out(s, *closing)) return false;
        }
      }
    }
    queue_.push_back(a);
    queue_.push_back(b);
    return true;
  }

  bool set_out(State& s, EdgeId e) {
    if (s.edge[e] == EdgeState::Out) return true;
    if (s.edge[e] == EdgeState::In) return false;
    s.edge[e] = EdgeState::Out;
    const VertexIndex a = g_.edge(e).u, b = g_.edge(e).v;
    if (--s.avail[a] < 2 || --s.avail[b] < 2) return false;
    queue_.push_back(a);
    queue_.push_back(b);
    return true;
  }

  bool propagate(State& s) {
    while (!queue_.empty()) {
      const VertexIndex v = queue_.back();
      queue_.pop_back();
      if (s.in_deg[v] == 2) {
        for (EdgeId e : g_.rotation(v)) {
          if (s.edge[e] == EdgeState::Unknown && !set_out(s, e)) return fail();
        }
      } else if (s.avail[v] == 2) {
        for (EdgeId e : g_.rotation(v)) {
          if (s.edge[e] == EdgeState::Unknown && !set_in(s, e)) return fail();
        }
      }
    }
    return true;
  }

  bool fail() {
    queue_.clear();
    return false;
  }

  bool connected(const State& s) const {
    std::vector<char> seen(n_, 0);
    std::vector<VertexIndex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.rotation(v)) {
        if (s.edge[e] == EdgeState::Out) continue;
        const VertexIndex w = g_.other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  // A path end with the fewest options, else any vertex with the fewest.
  std::optional<EdgeId> branch_edge(const State& s) const {
    std::optional<VertexIndex> best;
    bool best_is_end = false;
    for (VertexIndex v = 0; v < n_; ++v) {
      if (s.in_deg[v] == 2) continue;
      const bool is_end = s.in_deg[v] == 1;
      if (!best || (is_end && !best_is_end) || (is_end == best_is_end && s.avail[v] < s.avail[*best])) {
        best = v;
        best_is_end = is_end;
      }
    }
    if (!best) return std::nullopt;
    for (EdgeId e : g_.rotation(*best)) {
      if (s.edge[e] == EdgeState::Unknown) return e;
    }
    return std::nullopt;
  }

  void dfs(const State& s) {
    if (solution_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (s.closed) {
      EdgeSet h = g_.empty_edge_set();
      for (EdgeId e = 0; e < s.edge.size(); ++e) {
        if (s.edge[e] == EdgeState::In) h.insert(e);
      }
      solution_ = std::move(h);
      return;
    }
    const auto e = branch_edge(s);
    if (!e) return;
    {
      State t = s;
      if (set_in(t, *e) && propagate(t) && connected(t)) dfs(t);
      queue_.clear();
    }
    if (solution_ || aborted_) return;
    {
      State t = s;
      if (set_out(t, *e) && propagate(t) && connected(t)) dfs(t);
      queue_.clear();
    }
  }

  const PlanarEmbedding& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<EdgeSet> solution_;
  std::vector<VertexIndex> queue_;
};

}  // namespace

OracleResult hamilton_oracle(const PlanarEmbedding& g, std::uint64_t budget) { return Search(g, budget).run(); }

}  // namespace pgg
