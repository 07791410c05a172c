#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "matroid_kappa/budget.hpp"
#include "matroid_kappa/core.hpp"

namespace mkappa {

// Connectivity value: a natural number or infinity. Finite matroids never
// produce infinity; the marker exists for windowed families.
class ConnValue {
 public:
  constexpr ConnValue() = default;
  constexpr explicit ConnValue(std::size_t v) : finite_(true), value_(v) {}
  static constexpr ConnValue infinite() {
    ConnValue c;
    c.finite_ = false;
    return c;
  }

  constexpr bool is_finite() const noexcept { return finite_; }
  // InvariantError when infinite.
  std::size_t value() const;
  std::string to_string() const;

  friend constexpr bool operator==(const ConnValue&, const ConnValue&) = default;
  friend constexpr std::strong_ordering operator<=>(const ConnValue& a, const ConnValue& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

 private:
  bool finite_ = true;
  std::size_t value_ = 0;
};

struct Separation {
  ElementSet left;
  ElementSet right;
  ConnValue kappa;
  // Smallest k for which (left, right) is a k-separation, if any.
  std::optional<std::size_t> order_k;
};

// Is (left, right) a k-separation: kappa <= k-1 and both sides >= k.
bool is_k_separation(const Separation& s, std::size_t k);

// del(I, J): fewest elements to drop from I + J to restore independence.
// Greedy canonical-order elimination; PreconditionError if I or J is dependent.
ConnValue del(const Matroid& m, const ElementSet& i, const ElementSet& j);

// Same quantity by trying every F in order of size. Exponential; kept as a
// cross-check for the greedy route.
ConnValue del_exhaustive(const Matroid& m, const ElementSet& i, const ElementSet& j);

// kappa(X) = del(B, B') for the greedy bases of M|X and M - X.
ConnValue kappa(const Matroid& m, const ElementSet& x);
std::size_t kappa_mask(const Matroid& m, Mask x);

// r(X) + r(E \ X) - r(E) == kappa(X).
bool kappa_finite_equivalence(const Matroid& m, const ElementSet& x);

struct KappaBetween {
  ConnValue value;
  ElementSet argmin;  // a U with X <= U <= E \ Y attaining the minimum
};

// min { kappa(U) : X <= U <= E \ Y } by branch-and-bound over the free
// elements. DomainError if X and Y meet; CapacityError when
// |E \ (X + Y)| exceeds budget.kappa_between_free.
KappaBetween kappa_between_witness(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                   const Budget& budget = {});
ConnValue kappa_between(const Matroid& m, const ElementSet& x, const ElementSet& y,
                        const Budget& budget = {});

// First l-separation with l <= k in canonical subset order of the left side.
std::optional<Separation> find_separation(const Matroid& m, std::size_t k, const Budget& budget = {});

// No l-separation for any l < k.
bool is_k_connected(const Matroid& m, std::size_t k, const Budget& budget = {});

// Given kappa(X', Y') = k-1, the first (x, y) in canonical order with
// kappa(X' + x, Y' + y) = k, or nullopt when kappa(X, Y) < k.
std::optional<std::pair<std::size_t, std::size_t>> grow_pair(
    const Matroid& m, const ElementSet& x, const ElementSet& y, const ElementSet& x_prime,
    const ElementSet& y_prime, std::size_t k, const Budget& budget = {});

}  // namespace mkappa
