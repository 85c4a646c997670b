#include "pgg/edge_set.hpp"

#include <stdexcept>

namespace pgg {

EdgeSet::EdgeSet(std::size_t universe, std::initializer_list<EdgeId> ids) : bits_(universe) {
  for (EdgeId e : ids) bits_.set(e);
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  if (other.universe() != universe()) throw std::invalid_argument("EdgeSet universes differ");
  return bits_.intersects(other.bits_);
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  if (other.universe() != universe()) throw std::invalid_argument("EdgeSet universes differ");
  bits_ ^= other.bits_;
  return *this;
}

EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

EdgeSet sym_diff_all(std::span<const EdgeSet> sets, std::size_t universe) {
  EdgeSet acc(universe);
  for (const auto& s : sets) acc ^= s;
  return acc;
}

}  // namespace pgg
