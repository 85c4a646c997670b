#pragma once

#include <cstddef>
#include <string>

#include "pgg/edge_set.hpp"
#include "pgg/embedding.hpp"

namespace pgg {

struct CycleClass {
  enum class Kind { Empty, SingleCycle, DisjointCycles, Other };

  Kind kind = Kind::Empty;
  std::size_t value = 0;  // cycle length for SingleCycle, component count for DisjointCycles

  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

std::string to_string(CycleClass c);

/// Degree-and-connectivity analysis of the subgraph spanned by `e`.
CycleClass classify_edge_set(const EdgeSet& e, const PlanarEmbedding& g);

bool is_hamilton_cycle(const EdgeSet& e, const PlanarEmbedding& g);

}  // namespace pgg
