#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pgg {

using EdgeId = std::size_t;

/// A GF(2) vector over the edges of one graph. Cycles, faces and their
/// symmetric differences are all EdgeSets.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : bits_(universe) {}
  EdgeSet(std::size_t universe, std::initializer_list<EdgeId> ids);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(EdgeId e) const { return e < bits_.size() && bits_.test(e); }

  void insert(EdgeId e) { bits_.set(e); }
  void erase(EdgeId e) { bits_.reset(e); }
  void flip(EdgeId e) { bits_.flip(e); }

  /// Edge ids in ascending order.
  std::vector<EdgeId> ids() const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<EdgeId>(i));
  }

  bool intersects(const EdgeSet& other) const;

  EdgeSet& operator^=(const EdgeSet& other);
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) { return a.bits_ < b.bits_; }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b);

/// GF(2) sum of all operands; `universe` sizes the result when `sets` is empty.
EdgeSet sym_diff_all(std::span<const EdgeSet> sets, std::size_t universe);

}  // namespace pgg
