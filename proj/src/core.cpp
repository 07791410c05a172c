#include "matroid_kappa/core.hpp"

#include <algorithm>
#include <numeric>

#include "matroid_kappa/errors.hpp"

namespace mkappa {

bool is_independent(const Matroid& m, const ElementSet& s) {
  m.require_member_set(s);
  return m.independent(s.mask());
}

std::size_t rank(const Matroid& m, const ElementSet& s) {
  m.require_member_set(s);
  return m.rank(s.mask());
}

bool is_basis(const Matroid& m, const ElementSet& b) {
  m.require_member_set(b);
  return b.size() == m.full_rank() && m.independent(b.mask());
}

bool is_circuit(const Matroid& m, const ElementSet& c) {
  m.require_member_set(c);
  const Mask s = c.mask();
  if (s == 0 || m.independent(s)) return false;
  bool minimal = true;
  for_each_bit(s, [&](std::size_t i) {
    if (minimal && !m.independent(s & ~bit(i))) minimal = false;
  });
  return minimal;
}

Mask greedy_extend(const Matroid& m, Mask start, Mask within) {
  Mask j = start;
  for_each_bit(within & ~start, [&](std::size_t i) {
    if (m.independent(j | bit(i))) j |= bit(i);
  });
  return j;
}

ElementSet extend_to_basis(const Matroid& m, const ElementSet& i, const ElementSet& x) {
  m.require_member_set(i);
  m.require_member_set(x);
  if (!i.subset_of(x)) throw DomainError("extend_to_basis: " + i.to_string() + " is not inside " + x.to_string());
  if (!m.independent(i.mask())) throw PreconditionError("extend_to_basis: " + i.to_string() + " is dependent");
  return m.set_of(greedy_extend(m, i.mask(), x.mask()));
}

std::vector<Mask> circuit_masks(const Matroid& m, const Budget& budget) {
  const auto n = m.size();
  if (n > budget.circuit_enumeration) {
    throw CapacityError("circuit enumeration over " + std::to_string(n) + " elements exceeds budget " +
                        std::to_string(budget.circuit_enumeration));
  }
  std::vector<Mask> out;
  const Mask limit = m.full_mask();
  for (Mask s = 1; s != 0 && s <= limit; ++s) {
    if (m.independent(s)) continue;
    bool minimal = true;
    for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
      const Mask low = rest & (~rest + 1);
      if (!m.independent(s & ~low)) minimal = false;
    }
    if (minimal) out.push_back(s);
    if (s == limit) break;
  }
  return out;
}

std::vector<Circuit> enumerate_circuits(const Matroid& m, const Budget& budget) {
  std::vector<Circuit> out;
  for (Mask c : circuit_masks(m, budget)) out.push_back(Circuit{m.set_of(c)});
  return out;
}

Mask fundamental_circuit_mask(const Matroid& m, Mask b, std::size_t x) {
  Mask c = bit(x);
  for_each_bit(b, [&](std::size_t e) {
    if (m.independent((b & ~bit(e)) | bit(x))) c |= bit(e);
  });
  return c;
}

Circuit fundamental_circuit(const Matroid& m, const ElementSet& basis, std::size_t x) {
  if (!is_basis(m, basis)) throw PreconditionError("fundamental_circuit: " + basis.to_string() + " is not a basis");
  if (x >= m.size()) throw DomainError("fundamental_circuit: element index out of range");
  if (basis.contains(x)) {
    throw PreconditionError("fundamental_circuit: " + m.ground()->label(x) + " lies in the basis");
  }
  if (m.independent(basis.mask() | bit(x))) {
    throw PreconditionError("fundamental_circuit: basis plus " + m.ground()->label(x) + " is independent");
  }
  return Circuit{m.set_of(fundamental_circuit_mask(m, basis.mask(), x))};
}

Circuit fundamental_circuit(const Matroid& m, const ElementSet& basis, std::string_view x) {
  return fundamental_circuit(m, basis, m.ground()->require_index(x));
}

std::vector<Mask> fundamental_components(const Matroid& m, Mask within) {
  const Mask b = greedy_extend(m, 0, within);
  std::vector<std::size_t> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for_each_bit(within & ~b, [&](std::size_t e) {
    const Mask c = fundamental_circuit_mask(m, b, e);
    for_each_bit(c, [&](std::size_t f) {
      const auto a = find(e);
      const auto r = find(f);
      if (a != r) parent[std::max(a, r)] = std::min(a, r);
    });
  });
  std::vector<Mask> blocks;
  std::vector<int> slot(m.size(), -1);
  for_each_bit(within, [&](std::size_t e) {
    const auto r = find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.push_back(0);
    }
    blocks[static_cast<std::size_t>(slot[r])] |= bit(e);
  });
  return blocks;
}

namespace {

bool same_component(const Matroid& m, Mask within, std::size_t x, std::size_t y) {
  for (Mask block : fundamental_components(m, within)) {
    if (block & bit(x)) return (block & bit(y)) != 0;
  }
  return false;
}

}  // namespace

Mask circuit_through(const Matroid& m, Mask through, Mask within) {
  if (through == 0 || popcount(through) > 2) throw DomainError("circuit_through needs one or two elements");
  if (!subset_of(through, within)) return 0;
  const auto pts = bit_indices(through);
  auto holds = [&](Mask s) {
    if (pts.size() == 1) return m.rank(s & ~through) == m.rank(s);
    return same_component(m, s, pts[0], pts[1]);
  };
  if (!holds(within)) return 0;
  Mask s = within;
  for_each_bit(within & ~through, [&](std::size_t f) {
    if (holds(s & ~bit(f))) s &= ~bit(f);
  });
  return s;
}

}  // namespace mkappa
