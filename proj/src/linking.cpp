#include "matroid_kappa/linking.hpp"

#include <algorithm>
#include <functional>

#include "matroid_kappa/errors.hpp"
#include "matroid_kappa/windows.hpp"

namespace mkappa {
namespace {

// Exhaustive within budget, matroid intersection beyond it.
ConnValue kappa_between_any(const Matroid& m, const ElementSet& x, const ElementSet& y, const Budget& budget) {
  const Mask free = m.full_mask() & ~(x.mask() | y.mask());
  if (popcount(free) <= budget.kappa_between_free) return kappa_between(m, x, y, budget);
  return window_kappa_between(m, x, y);
}

// kappa of (X, Y) in M/C - D with C + D = E \ (X + Y), from ranks of M.
std::size_t minor_kappa(const Matroid& m, Mask x, Mask y, Mask c) {
  const auto rc = m.rank(c);
  return m.rank(x | c) + m.rank(y | c) - m.rank(x | y | c) - rc;
}

Mask restrict_mask(const Matroid& from, const Matroid& to, Mask s) {
  return from.set_of(s).rebased(to.ground()).mask();
}

void require_disjoint(const Matroid& m, const ElementSet& x, const ElementSet& y) {
  m.require_member_set(x);
  m.require_member_set(y);
  if (!x.disjoint_from(y)) throw DomainError("X and Y meet in " + (x & y).to_string());
}

}  // namespace

LinkingResult linking_partition(const Matroid& m, const ElementSet& x, const ElementSet& y, const Budget& budget) {
  require_disjoint(m, x, y);
  const Mask free = m.full_mask() & ~(x.mask() | y.mask());
  const auto width = popcount(free);
  if (width > budget.linking_free) {
    throw CapacityError("linking over " + std::to_string(width) + " free elements exceeds budget " +
                        std::to_string(budget.linking_free));
  }
  const ConnValue target = kappa_between_any(m, x, y, budget);
  const auto want = target.value();
  for (Mask packed = 0; packed < (Mask{1} << width); ++packed) {
    const Mask c = deposit(packed, free);
    if (minor_kappa(m, x.mask(), y.mask(), c) != want) continue;
    MinorSpec spec{m.set_of(c), m.set_of(free & ~c)};
    const Matroid minor = take_minor(m, spec);
    const ConnValue achieved = kappa_between(minor, x.rebased(minor.ground()), y.rebased(minor.ground()), budget);
    if (achieved != target) {
      throw InvariantError("linking_partition: rank shortcut and built minor disagree on " +
                           spec.contract.to_string());
    }
    return LinkingResult{spec, achieved, target, {}};
  }
  throw InvariantError("linking_partition: no partition of " + m.set_of(free).to_string() + " reaches kappa " +
                       target.to_string());
}

std::optional<Separation> extending_separation(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                               std::size_t k, const Budget& budget) {
  require_disjoint(m, x, y);
  const Mask free = m.full_mask() & ~(x.mask() | y.mask());
  const auto width = popcount(free);
  if (width > budget.separation_scan) {
    throw CapacityError("extension scan over " + std::to_string(width) + " free elements exceeds budget " +
                        std::to_string(budget.separation_scan));
  }
  if (k == 0) return std::nullopt;
  const auto n = m.size();
  for (Mask packed = 0; packed < (Mask{1} << width); ++packed) {
    const Mask u = x.mask() | deposit(packed, free);
    const auto kap = kappa_mask(m, u);
    if (kap + 1 > k || popcount(u) < k || n - popcount(u) < k) continue;
    return Separation{m.set_of(u), m.set_of(m.full_mask() & ~u), ConnValue(kap), kap + 1};
  }
  return std::nullopt;
}

BreakingCircuits breaking_circuits(const Matroid& m, const ElementSet& x, const ElementSet& y, std::size_t k,
                                   const Budget& budget) {
  require_disjoint(m, x, y);
  if (k == 0) throw PreconditionError("breaking_circuits: k must be positive");
  const Mask xm = x.mask();
  const Mask ym = y.mask();
  const auto inner = m.rank(xm) + m.rank(ym) - m.rank(xm | ym);
  if (inner + 1 != k || x.size() < k || y.size() < k) {
    throw PreconditionError("breaking_circuits: (" + x.to_string() + ", " + y.to_string() +
                            ") is not an exact " + std::to_string(k) + "-separation of M|(X+Y)");
  }
  if (kappa_between_any(m, x, y, budget) < ConnValue(k)) {
    throw PreconditionError("breaking_circuits: the separation extends to a " + std::to_string(k) +
                            "-separation of M");
  }

  const Matroid mx = contract(m, x);
  const Matroid my = contract(m, y);
  const Matroid mxy = contract(m, x | y);
  BreakingCircuits out{Circuit{m.none()}, Circuit{m.none()}, 0, {}, {}};
  Mask comp_x = 0;
  Mask comp_y = 0;
  for (Mask block : fundamental_components(mx, mx.full_mask())) {
    const Mask b = mx.set_of(block).rebased(m.ground()).mask();
    if ((b & ym) == 0) {
      out.comp_x.push_back(m.set_of(b));
      comp_x |= b;
    }
  }
  for (Mask block : fundamental_components(my, my.full_mask())) {
    const Mask b = my.set_of(block).rebased(m.ground()).mask();
    if ((b & xm) == 0) {
      out.comp_y.push_back(m.set_of(b));
      comp_y |= b;
    }
  }
  const Mask outside = m.full_mask() & ~(comp_x | comp_y | xm | ym);
  if (outside == 0) {
    throw InvariantError("breaking_circuits: components cover E although the separation does not extend");
  }
  const auto e = static_cast<std::size_t>(std::countr_zero(outside));
  out.pivot = e;

  // Circuit through e meeting `far`, with its part outside near + far a
  // circuit of M/(near + far), lifted first over far in M/near, then over near.
  auto build = [&](const Matroid& near_minor, Mask near, Mask far) -> Circuit {
    const auto e_near = near_minor.ground()->require_index(m.ground()->label(e));
    Mask c_near = 0;
    for (std::size_t f : bit_indices(far)) {
      const auto f_near = near_minor.ground()->require_index(m.ground()->label(f));
      c_near = circuit_through(near_minor, bit(e_near) | bit(f_near), near_minor.full_mask());
      if (c_near != 0) break;
    }
    if (c_near == 0) throw InvariantError("breaking_circuits: no circuit through the pivot meets the far side");
    const Mask c_in_m = near_minor.set_of(c_near).rebased(m.ground()).mask();
    const Mask within = restrict_mask(m, mxy, c_in_m & ~far);
    const Mask c_prime = circuit_through(mxy, bit(mxy.ground()->require_index(m.ground()->label(e))), within);
    if (c_prime == 0) throw InvariantError("breaking_circuits: no circuit of M/(X+Y) through the pivot");
    const ElementSet c_prime_set = mxy.set_of(c_prime);
    const Circuit mid = lift_circuit(near_minor, near_minor.set_of(restrict_mask(m, near_minor, far)), c_prime_set);
    const Circuit full = lift_circuit(m, m.set_of(near), mid.members);
    const Mask c = full.members.mask();
    const bool meets_far = (c & far) != 0;
    const bool residual_circuit = is_circuit(near_minor, m.set_of(c & ~near).rebased(near_minor.ground()));
    const bool core_circuit = is_circuit(mxy, m.set_of(c & ~(xm | ym)).rebased(mxy.ground()));
    if (!meets_far || !residual_circuit || !core_circuit) {
      throw InvariantError("breaking_circuits: constructed circuit " + full.members.to_string() +
                           " lacks a required property");
    }
    return full;
  };
  out.first = build(mx, xm, ym);
  out.second = build(my, ym, xm);

  const Mask z = xm | ym | out.first.members.mask() | out.second.members.mask();
  const Matroid r = restrict_to(m, m.set_of(z));
  if (extending_separation(r, x.rebased(r.ground()), y.rebased(r.ground()), k, budget)) {
    throw InvariantError("breaking_circuits: the separation still extends after adding the circuits");
  }
  return out;
}

LinkingResult constructive_linking(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                   const Budget& budget) {
  require_disjoint(m, x, y);
  const ConnValue target = kappa_between_any(m, x, y, budget);
  const auto k = target.value();
  const Mask xm = x.mask();
  const Mask ym = y.mask();
  const Mask free = m.full_mask() & ~(xm | ym);
  LinkingResult result{MinorSpec{m.none(), m.set_of(free)}, ConnValue(0), target, {}};
  result.witness_trace.push_back(TraceStage{"target", {{"X", x}, {"Y", y}}, {{"kappa", target}}});

  auto finish = [&](Mask c) {
    result.spec = MinorSpec{m.set_of(c), m.set_of(free & ~c)};
    result.achieved = ConnValue(minor_kappa(m, xm, ym, c));
    const Matroid minor = take_minor(m, result.spec);
    const auto check = kappa_between(minor, x.rebased(minor.ground()), y.rebased(minor.ground()), budget);
    if (check != result.achieved || result.achieved != target) {
      throw InvariantError("constructive_linking: minor reaches " + check.to_string() + ", expected " +
                           target.to_string());
    }
    result.witness_trace.push_back(
        TraceStage{"result", {{"C", result.spec.contract}, {"D", result.spec.remove}}, {{"achieved", check}}});
    return result;
  };
  if (k == 0) return finish(0);

  Mask xp = 0;
  Mask yp = 0;
  for (std::size_t t = 1; t <= k; ++t) {
    bool grown = false;
    for (std::size_t xi : bit_indices(xm & ~xp)) {
      for (std::size_t yi : bit_indices(ym & ~yp)) {
        if (kappa_between_any(m, m.set_of(xp | bit(xi)), m.set_of(yp | bit(yi)), budget) == ConnValue(t)) {
          xp |= bit(xi);
          yp |= bit(yi);
          grown = true;
          break;
        }
      }
      if (grown) break;
    }
    if (!grown) throw InvariantError("constructive_linking: cannot grow X', Y' to kappa " + std::to_string(t));
  }
  result.witness_trace.push_back(
      TraceStage{"grow", {{"X'", m.set_of(xp)}, {"Y'", m.set_of(yp)}}, {{"kappa", ConnValue(k)}}});

  auto restricted_kappa = [&](Mask z) {
    const Matroid r = restrict_to(m, m.set_of(z));
    return kappa_between_any(r, m.set_of(xp).rebased(r.ground()), m.set_of(yp).rebased(r.ground()), budget);
  };

  Mask a = 0;
  const auto blocks = fundamental_components(m, m.full_mask());
  for (std::size_t xi : bit_indices(xp)) {
    for (std::size_t yi : bit_indices(yp)) {
      const bool together = std::any_of(blocks.begin(), blocks.end(),
                                        [&](Mask b) { return (b & bit(xi)) && (b & bit(yi)); });
      if (together) {
        a = circuit_through(m, bit(xi) | bit(yi), m.full_mask());
        break;
      }
    }
    if (a != 0) break;
  }
  if (a == 0) throw InvariantError("constructive_linking: no circuit meets both X' and Y'");
  Mask z = xp | yp | a;
  ConnValue level = restricted_kappa(z);
  if (level < ConnValue(1)) throw InvariantError("constructive_linking: kappa on Z1 below 1");
  result.witness_trace.push_back(TraceStage{"Z1", {{"A", m.set_of(a)}, {"Z", m.set_of(z)}}, {{"kappa", level}}});

  for (std::size_t t = 2; t <= k; ++t) {
    const Matroid r = restrict_to(m, m.set_of(z));
    const Mask rx = restrict_mask(m, r, xp);
    const Mask ry = restrict_mask(m, r, yp);
    const Mask rfree = r.full_mask() & ~(rx | ry);
    if (popcount(rfree) > budget.separation_scan) {
      throw CapacityError("constructive_linking: Z has " + std::to_string(popcount(rfree)) +
                          " free elements, over the separation budget");
    }
    Mask grown = z;
    std::size_t broken = 0;
    for (Mask packed = 0; packed < (Mask{1} << popcount(rfree)); ++packed) {
      const Mask u = rx | deposit(packed, rfree);
      if (kappa_mask(r, u) + 1 > t) continue;
      const Mask left = r.set_of(u).rebased(m.ground()).mask();
      const auto bc = breaking_circuits(m, m.set_of(left), m.set_of(z & ~left), t, budget);
      grown |= bc.first.members.mask() | bc.second.members.mask();
      ++broken;
    }
    z = grown;
    level = restricted_kappa(z);
    if (level < ConnValue(t)) {
      throw InvariantError("constructive_linking: kappa on Z" + std::to_string(t) + " is " + level.to_string());
    }
    result.witness_trace.push_back(TraceStage{"Z" + std::to_string(t),
                                              {{"Z", m.set_of(z)}},
                                              {{"kappa", level}, {"separations", ConnValue(broken)}}});
  }

  const Matroid zk = restrict_to(m, m.set_of(z));
  const auto inner = linking_partition(zk, m.set_of(xp).rebased(zk.ground()), m.set_of(yp).rebased(zk.ground()),
                                       budget);
  const Mask c_prime = inner.spec.contract.rebased(m.ground()).mask();
  const Mask d_tilde = inner.spec.remove.rebased(m.ground()).mask();
  result.witness_trace.push_back(TraceStage{
      "partition", {{"C'", m.set_of(c_prime)}, {"D~", m.set_of(d_tilde)}}, {{"kappa", inner.achieved}}});
  return finish(c_prime & ~(xm | ym));
}

KappaChain infinite_kappa_chain(const Matroid& w, const ElementSet& x, const ElementSet& y, std::size_t t_max) {
  require_disjoint(w, x, y);
  const Mask xm = x.mask();
  const Mask ym = y.mask();
  std::vector<Mask> chain;

  std::function<bool(Mask)> extend = [&](Mask used) -> bool {
    if (chain.size() == t_max) return true;
    const Matroid rest = contract(w, w.set_of(used));
    const auto blocks = fundamental_components(rest, rest.full_mask());
    for (std::size_t xi : bit_indices(xm & ~used)) {
      for (std::size_t yi : bit_indices(ym & ~used)) {
        const auto a = rest.ground()->require_index(w.ground()->label(xi));
        const auto b = rest.ground()->require_index(w.ground()->label(yi));
        const bool together = std::any_of(blocks.begin(), blocks.end(),
                                          [&](Mask blk) { return (blk & bit(a)) && (blk & bit(b)); });
        if (!together) continue;
        const Mask c = circuit_through(rest, bit(a) | bit(b), rest.full_mask());
        const Mask in_w = rest.set_of(c).rebased(w.ground()).mask();
        chain.push_back(in_w);
        if (extend(used | in_w)) return true;
        chain.pop_back();
      }
    }
    return false;
  };
  if (!extend(0)) {
    throw PreconditionError("infinite_kappa_chain: every choice stalls before " + std::to_string(t_max) +
                            " circuits");
  }
  Mask all = 0;
  for (Mask c : chain) all |= c;
  const Mask contracted = all & ~(xm | ym);
  KappaChain out{{}, w.set_of(all & xm), w.set_of(all & ym), w.set_of(contracted), false, false};
  for (Mask c : chain) out.circuits.push_back(Circuit{w.set_of(c)});
  const auto rc = w.rank(contracted);
  out.cx_independent = w.rank(out.cx.mask() | contracted) - rc == out.cx.size();
  out.cy_independent = w.rank(out.cy.mask() | contracted) - rc == out.cy.size();
  return out;
}

}  // namespace mkappa
