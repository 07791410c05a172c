#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mkappa {

/// Subset of a ground set, bit i standing for the i-th element in canonical order.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

inline constexpr Mask low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::size_t popcount(Mask m) noexcept { return static_cast<std::size_t>(std::popcount(m)); }

inline bool subset_of(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

inline std::vector<std::size_t> bit_indices(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

// Scatters the low popcount(support) bits of `packed` onto the set bits of
// `support`, lowest first. Used to enumerate subsets of a sparse mask in
// canonical binary order.
inline Mask deposit(Mask packed, Mask support) noexcept {
  Mask out = 0;
  std::size_t k = 0;
  for_each_bit(support, [&](std::size_t i) {
    if (packed & bit(k)) out |= bit(i);
    ++k;
  });
  return out;
}

// Maps a child ground set into its parent: child element i is parent element
// parent_index[i]. Derived matroids use this to delegate oracle calls.
class IndexMap {
 public:
  IndexMap() = default;
  explicit IndexMap(std::vector<std::size_t> parent_index) : parent_index_(std::move(parent_index)) {}

  Mask to_parent(Mask child) const noexcept {
    Mask out = 0;
    for_each_bit(child, [&](std::size_t i) { out |= bit(parent_index_[i]); });
    return out;
  }

  std::size_t size() const noexcept { return parent_index_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return parent_index_[i]; }

 private:
  std::vector<std::size_t> parent_index_;
};

}  // namespace mkappa
