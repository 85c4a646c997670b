#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgg/edge_set.hpp"
#include "pgg/embedding.hpp"
#include "pgg/faces.hpp"

namespace pgg {

/// Inside-face form of Grinberg's identity: choose inside faces so that
/// sum(i * f_i) - 2 * (sum(f_i) - 1) = |V|, i.e. sum over inside faces of
/// (length - 2) equals |V| - 2.
struct GrinbergEquation {
  std::vector<std::size_t> face_lengths;  // one entry per basis face, by position
  std::size_t order = 0;                  // |V|

  std::int64_t target() const { return static_cast<std::int64_t>(order) - 2; }
};

GrinbergEquation equation_of(const FaceBasis& basis, const PlanarEmbedding& g);

/// "10f10 + 5f5 + 4f4 - 2(f10 + f5 + f4 - 1) = 25": one term per distinct
/// length, longest first.
std::string format_equation(const GrinbergEquation& eq);

struct GrinbergPartition {
  std::vector<std::size_t> inside;   // basis positions, ascending
  std::vector<std::size_t> outside;  // complement, ascending
  bool feasible = false;
};

inline constexpr std::size_t kDefaultSolveLimit = 64;

/// Up to `limit` inside sets hitting the target, in lexicographic order of
/// their sorted position lists. Empty result means infeasible.
std::vector<GrinbergPartition> solve(const GrinbergEquation& eq, std::size_t limit = kDefaultSolveLimit);

bool is_feasible(const GrinbergEquation& eq);

/// Inclusion-exclusion bookkeeping for a subset f of the basis.
///
/// With S_k the sum of all k-fold vertex-set intersections, the union size is
/// S_1 - S_2[s=2] + beta, where S_2[s=2] sums the pairs sharing exactly two
/// vertices and beta collects the remaining pair terms and all higher-order
/// terms with their alternating signs. A Hamiltonian subset has beta = 0 and
/// S_2[s=2] = 2(|f| - 1).
struct BetaReport {
  struct PairViolation {
    int face_a = 0;
    int face_b = 0;
    std::size_t shared = 0;  // |V_a ∩ V_b|, neither 0 nor 2
  };
  struct HigherViolation {
    VertexId vertex = 0;
    std::vector<int> faces;  // three or more subset faces through the vertex
  };

  std::vector<PairViolation> pairwise_violations;
  std::vector<HigherViolation> higher_order_violations;
  std::int64_t beta = 0;
  bool beta_zero = false;         // beta == 0
  bool strict_beta_zero = false;  // no violation of either kind
  std::size_t pair_sum = 0;       // S_2[s=2]
  std::size_t all_pair_sum = 0;   // S_2 over every intersecting pair
  bool pair_sum_matches = false;  // pair_sum == 2(|f| - 1)
  std::size_t vertex_sum = 0;     // S_1
  std::size_t union_size = 0;     // |∪ V_i|
};

/// `subset` holds basis positions; throws std::invalid_argument when empty.
BetaReport audit_face_union(std::span<const std::size_t> subset, const FaceBasis& basis, const PlanarEmbedding& g);

struct GrinbergVerification {
  std::vector<std::size_t> inside;       // positions enclosed by the cycle
  std::int64_t inside_residual = 0;      // sum_inside(i - 2) - (|V| - 2)
  std::optional<std::int64_t> balance_residual;  // sum (i-2)(f' - f'') with the outer face outside
};

/// Throws std::invalid_argument unless `h` is a Hamilton cycle of `g`.
GrinbergVerification verify_grinberg_identity(const EdgeSet& h, const FaceBasis& basis, const PlanarEmbedding& g);

}  // namespace pgg
