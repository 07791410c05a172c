#include "matroid_kappa/connectivity.hpp"

#include <algorithm>

#include "matroid_kappa/errors.hpp"

namespace mkappa {

std::size_t ConnValue::value() const {
  if (!finite_) throw InvariantError("value() of an infinite connectivity");
  return value_;
}

std::string ConnValue::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

bool is_k_separation(const Separation& s, std::size_t k) {
  if (k == 0 || !s.kappa.is_finite()) return false;
  return s.kappa.value() + 1 <= k && s.left.size() >= k && s.right.size() >= k;
}

ConnValue del(const Matroid& m, const ElementSet& i, const ElementSet& j) {
  m.require_member_set(i);
  m.require_member_set(j);
  if (!m.independent(i.mask())) throw PreconditionError("del: " + i.to_string() + " is dependent");
  if (!m.independent(j.mask())) throw PreconditionError("del: " + j.to_string() + " is dependent");
  Mask kept = i.mask();
  std::size_t removed = 0;
  for_each_bit(j.mask() & ~i.mask(), [&](std::size_t e) {
    if (m.independent(kept | bit(e))) {
      kept |= bit(e);
    } else {
      ++removed;
    }
  });
  return ConnValue(removed);
}

ConnValue del_exhaustive(const Matroid& m, const ElementSet& i, const ElementSet& j) {
  m.require_member_set(i);
  m.require_member_set(j);
  if (!m.independent(i.mask()) || !m.independent(j.mask())) throw PreconditionError("del: dependent argument");
  const Mask u = i.mask() | j.mask();
  const auto width = popcount(u);
  if (width > 24) throw CapacityError("del_exhaustive over more than 24 elements");
  for (std::size_t f = 0; f <= width; ++f) {
    for (Mask packed = 0; packed < (Mask{1} << width); ++packed) {
      if (popcount(packed) != f) continue;
      if (m.independent(u & ~deposit(packed, u))) return ConnValue(f);
    }
  }
  throw InvariantError("del_exhaustive: removing everything left a dependent set");
}

ConnValue kappa(const Matroid& m, const ElementSet& x) {
  m.require_member_set(x);
  const Mask b = greedy_extend(m, 0, x.mask());
  const Mask b_rest = greedy_extend(m, 0, m.full_mask() & ~x.mask());
  return del(m, m.set_of(b), m.set_of(b_rest));
}

std::size_t kappa_mask(const Matroid& m, Mask x) {
  return m.rank(x) + m.rank(m.full_mask() & ~x) - m.full_rank();
}

bool kappa_finite_equivalence(const Matroid& m, const ElementSet& x) {
  return kappa_mask(m, x.mask()) == kappa(m, x).value();
}

namespace {

struct BetweenSearch {
  const Matroid& m;
  Mask x;
  Mask y;
  std::vector<std::size_t> order;  // free elements, highest first
  std::size_t best;  // r(U) + r(E \ U) of the best leaf so far
  Mask best_u;

  // Leaves are reached in increasing order of U's mask, so the first
  // minimum found is the canonical one.
  void run(std::size_t depth, Mask in, Mask out) {
    const std::size_t lb = m.rank(x | in) + m.rank(y | out);
    if (lb >= best) return;
    if (depth == order.size()) {
      best = lb;
      best_u = x | in;
      return;
    }
    const Mask e = bit(order[depth]);
    run(depth + 1, in, out | e);
    run(depth + 1, in | e, out);
  }
};

}  // namespace

KappaBetween kappa_between_witness(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                   const Budget& budget) {
  m.require_member_set(x);
  m.require_member_set(y);
  if (!x.disjoint_from(y)) throw DomainError("kappa_between: X and Y meet in " + (x & y).to_string());
  const Mask free = m.full_mask() & ~(x.mask() | y.mask());
  if (popcount(free) > budget.kappa_between_free) {
    throw CapacityError("kappa_between over " + std::to_string(popcount(free)) + " free elements exceeds budget " +
                        std::to_string(budget.kappa_between_free));
  }
  auto order = bit_indices(free);
  std::reverse(order.begin(), order.end());
  BetweenSearch search{m, x.mask(), y.mask(), std::move(order), static_cast<std::size_t>(-1), 0};
  search.run(0, 0, 0);
  return KappaBetween{ConnValue(search.best - m.full_rank()), m.set_of(search.best_u)};
}

ConnValue kappa_between(const Matroid& m, const ElementSet& x, const ElementSet& y, const Budget& budget) {
  return kappa_between_witness(m, x, y, budget).value;
}

std::optional<Separation> find_separation(const Matroid& m, std::size_t k, const Budget& budget) {
  const auto n = m.size();
  if (n > budget.separation_scan) {
    throw CapacityError("separation scan over " + std::to_string(n) + " elements exceeds budget " +
                        std::to_string(budget.separation_scan));
  }
  if (k == 0 || n < 2) return std::nullopt;
  const Mask full = m.full_mask();
  for (Mask s = 1; s < full; ++s) {
    const auto kap = kappa_mask(m, s);
    const auto order = kap + 1;
    if (order > k || popcount(s) < order || n - popcount(s) < order) continue;
    return Separation{m.set_of(s), m.set_of(full & ~s), ConnValue(kap), order};
  }
  return std::nullopt;
}

bool is_k_connected(const Matroid& m, std::size_t k, const Budget& budget) {
  if (k <= 1) return true;
  return !find_separation(m, k - 1, budget).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> grow_pair(const Matroid& m, const ElementSet& x,
                                                             const ElementSet& y, const ElementSet& x_prime,
                                                             const ElementSet& y_prime, std::size_t k,
                                                             const Budget& budget) {
  m.require_member_set(x);
  m.require_member_set(y);
  if (!x_prime.subset_of(x) || !y_prime.subset_of(y)) throw PreconditionError("grow_pair: X' or Y' not inside X or Y");
  if (k == 0) throw PreconditionError("grow_pair: k must be positive");
  const auto start = kappa_between(m, x_prime, y_prime, budget);
  if (start != ConnValue(k - 1)) {
    throw PreconditionError("grow_pair: kappa(X', Y') = " + start.to_string() + ", expected " +
                            std::to_string(k - 1));
  }
  if (kappa_between(m, x, y, budget) < ConnValue(k)) return std::nullopt;
  for (std::size_t xi : (x - x_prime).indices()) {
    for (std::size_t yi : (y - y_prime).indices()) {
      if (kappa_between(m, x_prime.with(xi), y_prime.with(yi), budget) == ConnValue(k)) return std::pair{xi, yi};
    }
  }
  throw InvariantError("grow_pair: kappa(X, Y) >= k but no pair raises kappa(X', Y')");
}

}  // namespace mkappa
