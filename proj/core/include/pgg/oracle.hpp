#pragma once

#include <cstdint>
#include <optional>

#include "pgg/edge_set.hpp"
#include "pgg/embedding.hpp"

namespace pgg {

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

struct OracleResult {
  std::optional<EdgeSet> found;  // a Hamilton cycle when one exists
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;        // budget exhausted before a decision

  /// nullopt when the search gave up.
  std::optional<bool> hamiltonian() const {
    if (found) return true;
    if (timed_out) return std::nullopt;
    return false;
  }
};

/// Exact Hamilton cycle search independent of the face machinery: edge-state
/// backtracking with degree propagation, premature-cycle and connectivity
/// pruning. `budget` caps the number of search nodes.
OracleResult hamilton_oracle(const PlanarEmbedding& g, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace pgg
