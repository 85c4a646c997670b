#include "pgg/grinberg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pgg/cycles.hpp"

namespace pgg {

GrinbergEquation equation_of(const FaceBasis& basis, const PlanarEmbedding& g) {
  GrinbergEquation eq;
  eq.order = g.vertex_count();
  eq.face_lengths.reserve(basis.faces.size());
  for (const Face& f : basis.faces) eq.face_lengths.push_back(f.length());
  return eq;
}

std::string format_equation(const GrinbergEquation& eq) {
  std::vector<std::size_t> lengths = eq.face_lengths;
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  std::ostringstream out;
  if (lengths.empty()) {
    out << "-2(-1) = " << eq.order;
    return out.str();
  }
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    out << (k ? " + " : "") << lengths[k] << 'f' << lengths[k];
  }
  out << " - 2(";
  for (std::size_t k = 0; k < lengths.size(); ++k) out << (k ? " + " : "") << 'f' << lengths[k];
  out << " - 1) = " << eq.order;
  return out.str();
}

namespace {

// reach[i][s]: faces i..n-1 contain a subset whose values sum to exactly s.
std::vector<std::vector<char>> suffix_reach(const std::vector<std::int64_t>& value, std::int64_t target) {
  const std::size_t n = value.size();
  const auto width = static_cast<std::size_t>(target + 1);
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(width, 0));
  reach[n][0] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t s = 0; s < width; ++s) {
      const auto v = static_cast<std::size_t>(value[i]);
      reach[i][s] = reach[i + 1][s] || (v <= s && reach[i + 1][s - v]);
    }
  }
  return reach;
}

std::vector<std::int64_t> values_of(const GrinbergEquation& eq) {
  std::vector<std::int64_t> value;
  value.reserve(eq.face_lengths.size());
  for (std::size_t len : eq.face_lengths) {
    if (len < 3) throw std::invalid_argument("face length below 3");
    value.push_back(static_cast<std::int64_t>(len) - 2);
  }
  return value;
}

}  // namespace

std::vector<GrinbergPartition> solve(const GrinbergEquation& eq, std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("solve: limit must be at least 1");
  const auto value = values_of(eq);
  const std::int64_t target = eq.target();
  std::vector<GrinbergPartition> out;
  if (target < 0) return out;
  const auto reach = suffix_reach(value, target);
  const std::size_t n = value.size();
  if (!reach[0][static_cast<std::size_t>(target)]) return out;

  std::vector<std::size_t> chosen;
  auto emit = [&] {
    GrinbergPartition p;
    p.inside = chosen;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (k < chosen.size() && chosen[k] == i) ++k;
      else p.outside.push_back(i);
    }
    p.feasible = true;
    out.push_back(std::move(p));
  };
  // Depth-first over the next included position; values are positive, so a
  // set that hits the target has no extensions that also hit it.
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t start, std::int64_t remaining) {
    if (out.size() >= limit) return;
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = start; i < n && out.size() < limit; ++i) {
      if (value[i] > remaining) continue;
      const auto rest = static_cast<std::size_t>(remaining - value[i]);
      if (!reach[i + 1][rest]) continue;
      chosen.push_back(i);
      walk(i + 1, remaining - value[i]);
      chosen.pop_back();
    }
  };
  walk(0, target);
  return out;
}

bool is_feasible(const GrinbergEquation& eq) {
  const std::int64_t target = eq.target();
  if (target < 0) return false;
  return suffix_reach(values_of(eq), target)[0][static_cast<std::size_t>(target)] != 0;
}

BetaReport audit_face_union(std::span<const std::size_t> subset, const FaceBasis& basis, const PlanarEmbedding& g) {
  if (subset.empty()) throw std::invalid_argument("audit_face_union: empty subset");
  BetaReport r;
  std::vector<std::vector<char>> member;
  member.reserve(subset.size());
  std::vector<std::vector<int>> through(g.vertex_count());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const Face& f = basis.faces.at(subset[k]);
    std::vector<char> m(g.vertex_count(), 0);
    for (VertexIndex v : f.vertices) {
      m[v] = 1;
      through[v].push_back(f.id);
    }
    r.vertex_sum += f.length();
    member.push_back(std::move(m));
  }

  std::int64_t off_pairs = 0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      std::size_t shared = 0;
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) shared += (member[a][v] && member[b][v]) ? 1 : 0;
      r.all_pair_sum += shared;
      if (shared == 2) {
        r.pair_sum += 2;
      } else if (shared != 0) {
        off_pairs += static_cast<std::int64_t>(shared);
        r.pairwise_violations.push_back({basis.faces[subset[a]].id, basis.faces[subset[b]].id, shared});
      }
    }
  }

  // A vertex on m faces contributes sum_{k>=3} (-1)^(k+1) C(m,k) = 1 - m + C(m,2).
  std::int64_t higher = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto m = static_cast<std::int64_t>(through[v].size());
    if (m == 0) continue;
    ++r.union_size;
    higher += 1 - m + m * (m - 1) / 2;
    if (m >= 3) r.higher_order_violations.push_back({g.id(v), through[v]});
  }

  r.beta = higher - off_pairs;
  r.beta_zero = r.beta == 0;
  r.strict_beta_zero = r.pairwise_violations.empty() && r.higher_order_violations.empty();
  r.pair_sum_matches = r.pair_sum == 2 * (subset.size() - 1);
  return r;
}

GrinbergVerification verify_grinberg_identity(const EdgeSet& h, const FaceBasis& basis, const PlanarEmbedding& g) {
  if (!is_hamilton_cycle(h, g)) throw std::invalid_argument("verify_grinberg_identity: not a Hamilton cycle");
  GrinbergVerification out;
  out.inside = enclosed_faces(h, basis, g);
  std::vector<char> in(basis.faces.size(), 0);
  for (std::size_t p : out.inside) in[p] = 1;

  std::int64_t inside_sum = 0, outside_sum = 0;
  for (std::size_t p = 0; p < basis.faces.size(); ++p) {
    const auto v = static_cast<std::int64_t>(basis.faces[p].length()) - 2;
    (in[p] ? inside_sum : outside_sum) += v;
  }
  out.inside_residual = inside_sum - (static_cast<std::int64_t>(g.vertex_count()) - 2);
  if (basis.outer) {
    outside_sum += static_cast<std::int64_t>(basis.outer->length()) - 2;
    out.balance_residual = inside_sum - outside_sum;
  }
  return out;
}

}  // namespace pgg
