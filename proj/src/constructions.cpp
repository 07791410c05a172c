#include "matroid_kappa/constructions.hpp"

#include <numeric>
#include <unordered_set>

#include "matroid_kappa/errors.hpp"

namespace mkappa {
namespace {

class DualOracle final : public IndependenceOracle {
 public:
  explicit DualOracle(Matroid m) : m_(std::move(m)) {}
  bool independent(Mask s) const override { return m_.rank(m_.full_mask() & ~s) == m_.full_rank(); }
  std::size_t rank(Mask s) const override {
    return popcount(s) + m_.rank(m_.full_mask() & ~s) - m_.full_rank();
  }

 private:
  Matroid m_;
};

class RestrictOracle final : public IndependenceOracle {
 public:
  RestrictOracle(Matroid m, IndexMap map) : m_(std::move(m)), map_(std::move(map)) {}
  bool independent(Mask s) const override { return m_.independent(map_.to_parent(s)); }
  std::size_t rank(Mask s) const override { return m_.rank(map_.to_parent(s)); }

 private:
  Matroid m_;
  IndexMap map_;
};

// S independent in M/C iff S + B_C independent in M.
class ContractOracle final : public IndependenceOracle {
 public:
  ContractOracle(Matroid m, IndexMap map, Mask basis)
      : m_(std::move(m)), map_(std::move(map)), basis_(basis), basis_size_(popcount(basis)) {}
  bool independent(Mask s) const override { return m_.independent(map_.to_parent(s) | basis_); }
  std::size_t rank(Mask s) const override { return m_.rank(map_.to_parent(s) | basis_) - basis_size_; }

 private:
  Matroid m_;
  IndexMap map_;
  Mask basis_;
  std::size_t basis_size_;
};

// Part p owns the contiguous bit block [offset[p], offset[p] + size[p]).
class SumOracle final : public IndependenceOracle {
 public:
  explicit SumOracle(std::vector<Matroid> parts) : parts_(std::move(parts)) {
    std::size_t off = 0;
    for (const auto& p : parts_) {
      offsets_.push_back(off);
      off += p.size();
    }
  }
  bool independent(Mask s) const override {
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      if (!parts_[p].independent(slice(s, p))) return false;
    }
    return true;
  }
  std::size_t rank(Mask s) const override {
    std::size_t r = 0;
    for (std::size_t p = 0; p < parts_.size(); ++p) r += parts_[p].rank(slice(s, p));
    return r;
  }

 private:
  Mask slice(Mask s, std::size_t p) const {
    const auto off = offsets_[p];
    return off >= 64 ? 0 : (s >> off) & low_mask(parts_[p].size());
  }

  std::vector<Matroid> parts_;
  std::vector<std::size_t> offsets_;
};

std::vector<std::string> labels_of(const Matroid& m, Mask s) {
  std::vector<std::string> out;
  for_each_bit(s, [&](std::size_t i) { out.push_back(m.ground()->label(i)); });
  return out;
}

// Accepts a set over M or over any matroid whose labels are a subset of M's.
Mask mask_in(const Matroid& m, const ElementSet& s) {
  if (same_universe(s.universe(), m.ground())) return s.mask();
  return s.rebased(m.ground()).mask();
}

}  // namespace

Matroid dual(const Matroid& m) {
  return Matroid(m.ground(), std::make_shared<DualOracle>(m), Representation::derived, "dual(" + m.summary() + ")");
}

Matroid restrict_to(const Matroid& m, const ElementSet& x) {
  m.require_member_set(x);
  auto ground = make_ground_set(labels_of(m, x.mask()));
  return Matroid(ground, std::make_shared<RestrictOracle>(m, IndexMap(x.indices())), Representation::derived,
                 "restrict(" + m.summary() + ", " + std::to_string(x.size()) + ")");
}

Matroid delete_set(const Matroid& m, const ElementSet& d) {
  m.require_member_set(d);
  return restrict_to(m, d.complement());
}

Matroid contract(const Matroid& m, const ElementSet& c) {
  m.require_member_set(c);
  const Mask rest = m.full_mask() & ~c.mask();
  const Mask basis = greedy_extend(m, 0, c.mask());
  auto ground = make_ground_set(labels_of(m, rest));
  return Matroid(ground, std::make_shared<ContractOracle>(m, IndexMap(bit_indices(rest)), basis),
                 Representation::derived, "contract(" + m.summary() + ", " + std::to_string(c.size()) + ")");
}

Matroid take_minor(const Matroid& m, const MinorSpec& spec) {
  m.require_member_set(spec.contract);
  m.require_member_set(spec.remove);
  if (!spec.contract.disjoint_from(spec.remove)) {
    throw DomainError("contract and delete overlap: " + (spec.contract & spec.remove).to_string());
  }
  if (spec.contract.empty() && spec.remove.empty()) return m;
  const Matroid contracted = contract(m, spec.contract);
  if (spec.remove.empty()) return contracted;
  return delete_set(contracted, spec.remove.rebased(contracted.ground()));
}

Matroid direct_sum(const std::vector<Matroid>& parts) {
  if (parts.empty()) throw DomainError("direct sum of no matroids");
  if (parts.size() == 1) return parts.front();
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  std::string summary = "sum(";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& l : parts[p].ground()->labels()) {
      if (!seen.insert(l).second) throw DomainError("direct sum: label " + l + " appears in two parts");
      labels.push_back(l);
    }
    summary += (p ? ", " : "") + parts[p].summary();
  }
  if (labels.size() > kMaxElements) throw CapacityError("direct sum has more than 64 elements");
  return Matroid(make_ground_set(std::move(labels)), std::make_shared<SumOracle>(parts), Representation::derived,
                 summary + ")");
}

ComponentPartition components(const Matroid& m, const Budget& budget) {
  const auto circuits = circuit_masks(m, budget);
  const auto n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // shares[e]: elements lying in a common circuit with e
  std::vector<Mask> shares(n, 0);
  for (Mask c : circuits) {
    const auto first = static_cast<std::size_t>(std::countr_zero(c));
    for_each_bit(c, [&](std::size_t e) {
      shares[e] |= c;
      const auto a = find(first);
      const auto b = find(e);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  std::vector<Mask> blocks;
  std::vector<int> slot(n, -1);
  for (std::size_t e = 0; e < n; ++e) {
    const auto r = find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.push_back(0);
    }
    blocks[static_cast<std::size_t>(slot[r])] |= bit(e);
  }
  ComponentPartition out;
  for (Mask b : blocks) {
    for_each_bit(b, [&](std::size_t e) {
      if (popcount(b) > 1 && !subset_of(b, shares[e])) {
        throw InvariantError("components: closure joined " + m.ground()->label(e) +
                             " with an element sharing no circuit with it");
      }
    });
    out.blocks.push_back(m.set_of(b));
  }
  return out;
}

Circuit lift_circuit(const Matroid& m, const ElementSet& x, const ElementSet& c) {
  m.require_member_set(x);
  const Mask cm = mask_in(m, c);
  if (cm & x.mask()) throw DomainError("lift_circuit: circuit meets the contracted set");
  const Matroid mx = contract(m, x);
  if (!is_circuit(mx, c.rebased(mx.ground()))) {
    throw PreconditionError("lift_circuit: " + c.to_string() + " is not a circuit of M/" + x.to_string());
  }
  // Smallest X' in mask order: drop elements from the top while C stays
  // dependent over the rest.
  auto dependent_over = [&](Mask s) { return m.rank(cm | s) - m.rank(s) < popcount(cm); };
  Mask s = x.mask();
  for (std::size_t i = m.size(); i-- > 0;) {
    if ((s & bit(i)) && dependent_over(s & ~bit(i))) s &= ~bit(i);
  }
  const ElementSet lifted = m.set_of(s | cm);
  if (!is_circuit(m, lifted)) {
    throw InvariantError("lift_circuit: " + lifted.to_string() + " is not a circuit");
  }
  return Circuit{lifted};
}

}  // namespace mkappa
