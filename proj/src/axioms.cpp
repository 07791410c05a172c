#include "matroid_kappa/axioms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "matroid_kappa/errors.hpp"

namespace mkappa {
namespace {

// Every exhaustive scan in this file indexes tables of size 2^n.
std::vector<char> membership(std::size_t n, const std::vector<Mask>& sets) {
  std::vector<char> table(std::size_t{1} << n, 0);
  for (Mask s : sets) table[s] = 1;
  return table;
}

bool by_size_then_mask(Mask a, Mask b) {
  const auto pa = popcount(a);
  const auto pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::string render(const GroundSet& g, Mask m) {
  if (m == 0) return "{}";
  return ElementSet(std::make_shared<const GroundSet>(g), m).to_string();
}

constexpr std::size_t kC3WorkLimit = 50'000'000;

AxiomCheck check_i1(const std::vector<char>& indep) {
  AxiomCheck c{"I1", AxiomStatus::pass, {}, {}};
  if (!indep[0]) {
    c.status = AxiomStatus::fail;
    c.witness = "{} is not independent";
  }
  return c;
}

AxiomCheck check_i2(const GroundSet& g, const std::vector<Mask>& sorted, const std::vector<char>& indep) {
  AxiomCheck c{"I2", AxiomStatus::pass, {}, {}};
  for (Mask s : sorted) {
    for (std::size_t x : bit_indices(s)) {
      if (!indep[s & ~bit(x)]) {
        c.status = AxiomStatus::fail;
        c.witness = "I=" + render(g, s) + " independent but I-" + g.label(x) + "=" + render(g, s & ~bit(x)) + " is not";
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_i3(const GroundSet& g, const std::vector<Mask>& sorted, const std::vector<char>& indep) {
  AxiomCheck c{"I3", AxiomStatus::pass, {}, {}};
  const Mask full = g.full_mask();
  std::vector<Mask> maximal;
  std::vector<Mask> rest;
  for (Mask s : sorted) {
    bool is_max = true;
    for_each_bit(full & ~s, [&](std::size_t x) {
      if (indep[s | bit(x)]) is_max = false;
    });
    (is_max ? maximal : rest).push_back(s);
  }
  for (Mask i : rest) {
    for (Mask imax : maximal) {
      bool augmentable = false;
      for_each_bit(imax & ~i, [&](std::size_t x) {
        if (indep[i | bit(x)]) augmentable = true;
      });
      if (!augmentable) {
        c.status = AxiomStatus::fail;
        c.witness = "I=" + render(g, i) + " not maximal, I'=" + render(g, imax) +
                    " maximal, no x in I'\\I with I+x independent";
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_c1(const std::vector<Mask>& circuits) {
  AxiomCheck c{"C1", AxiomStatus::pass, {}, {}};
  if (std::find(circuits.begin(), circuits.end(), Mask{0}) != circuits.end()) {
    c.status = AxiomStatus::fail;
    c.witness = "{} is a circuit";
  }
  return c;
}

AxiomCheck check_c2(const GroundSet& g, const std::vector<Mask>& circuits) {
  AxiomCheck c{"C2", AxiomStatus::pass, {}, {}};
  for (Mask a : circuits) {
    for (Mask b : circuits) {
      if (a != b && subset_of(a, b)) {
        c.status = AxiomStatus::fail;
        c.witness = render(g, a) + " is properly contained in " + render(g, b);
        return c;
      }
    }
  }
  return c;
}

// Strong circuit elimination, scanned by |X| so the first failure is a
// smallest witness. For fixed (C, X) the admissible C_x choices are
// independent of each other, so only the reachable unions matter.
AxiomCheck check_c3(const GroundSet& g, const std::vector<Mask>& circuits) {
  AxiomCheck c{"C3", AxiomStatus::pass, {}, {}};
  const std::size_t n = g.size();
  const std::size_t table = std::size_t{1} << n;
  // covered[A] = union of the circuits contained in A.
  std::vector<Mask> covered(table, 0);
  for (Mask d : circuits) covered[d] |= d;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < table; ++a) {
      if (a & bit(i)) covered[a] |= covered[a & ~bit(i)];
    }
  }
  std::size_t work = 0;
  std::size_t max_size = 0;
  for (Mask d : circuits) max_size = std::max(max_size, popcount(d));
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (Mask circ : circuits) {
      if (popcount(circ) < size) continue;
      const auto members = bit_indices(circ);
      for (Mask packed = 0; packed < (Mask{1} << members.size()); ++packed) {
        if (popcount(packed) != size) continue;
        const Mask x = deposit(packed, circ);
        // union -> one family (C_x) realising it
        std::map<Mask, std::vector<Mask>> reach{{0, {}}};
        bool empty_choice = false;
        for (std::size_t xi : bit_indices(x)) {
          std::map<Mask, std::vector<Mask>> next;
          for (Mask d : circuits) {
            if ((d & x) != bit(xi)) continue;
            for (const auto& [u, fam] : reach) {
              ++work;
              if (next.contains(u | d)) continue;
              auto f = fam;
              f.push_back(d);
              next.emplace(u | d, std::move(f));
            }
          }
          if (next.empty()) {
            empty_choice = true;
            break;
          }
          reach = std::move(next);
          if (work > kC3WorkLimit) {
            c.status = AxiomStatus::not_checked;
            c.note = "work limit reached after |X| < " + std::to_string(size);
            return c;
          }
        }
        if (empty_choice) continue;
        for (const auto& [u, fam] : reach) {
          const Mask allowed = (circ | u) & ~x;
          const Mask missing = (circ & ~u) & ~covered[allowed];
          if (missing == 0) continue;
          const auto z = static_cast<std::size_t>(std::countr_zero(missing));
          std::ostringstream w;
          w << "C=" << render(g, circ) << ", X=" << render(g, x) << ", family=";
          for (std::size_t k = 0; k < fam.size(); ++k) w << (k ? "," : "") << render(g, fam[k]);
          w << ", z=" << g.label(z) << ": no circuit through z inside " << render(g, allowed);
          c.status = AxiomStatus::fail;
          c.witness = w.str();
          return c;
        }
      }
    }
  }
  return c;
}

}  // namespace

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.status == AxiomStatus::pass; });
}

const AxiomCheck& AxiomReport::check(const std::string& axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return c;
  }
  throw DomainError("no axiom named " + axiom);
}

std::vector<Mask> independent_sets_from_circuits(std::size_t n, const std::vector<Mask>& circuits) {
  const std::size_t table = std::size_t{1} << n;
  std::vector<char> dependent(table, 0);
  for (Mask c : circuits) dependent[c] = 1;
  std::vector<Mask> out;
  for (std::size_t s = 0; s < table; ++s) {
    for (std::size_t i = 0; i < n && !dependent[s]; ++i) {
      if ((s & bit(i)) && dependent[s & ~bit(i)]) dependent[s] = 1;
    }
    if (!dependent[s]) out.push_back(s);
  }
  return out;
}

std::vector<Mask> circuits_from_independent_sets(std::size_t n, const std::vector<Mask>& independent) {
  const std::size_t table = std::size_t{1} << n;
  const auto indep = membership(n, independent);
  // below[s]: some proper subset of s is outside the family
  std::vector<char> below(table, 0);
  std::vector<Mask> out;
  for (std::size_t s = 0; s < table; ++s) {
    for (std::size_t i = 0; i < n && !below[s]; ++i) {
      if ((s & bit(i)) && (!indep[s & ~bit(i)] || below[s & ~bit(i)])) below[s] = 1;
    }
    if (!indep[s] && !below[s]) out.push_back(s);
  }
  return out;
}

AxiomReport check_axioms(const SetFamily& candidate, const Budget& budget) {
  if (!candidate.ground) throw DomainError("set family without a ground set");
  const auto& g = *candidate.ground;
  const std::size_t n = g.size();
  if (n > budget.axiom_check) {
    throw CapacityError("axiom check over " + std::to_string(n) + " elements exceeds budget " +
                        std::to_string(budget.axiom_check));
  }
  std::vector<Mask> sets = candidate.sets;
  for (Mask s : sets) {
    if (!subset_of(s, g.full_mask())) throw DomainError("family member outside the ground set");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<Mask> independent;
  std::vector<Mask> circuits;
  if (candidate.kind == SetFamily::Kind::independent_sets) {
    independent = sets;
    circuits = circuits_from_independent_sets(n, independent);
  } else {
    circuits = sets;
    independent = independent_sets_from_circuits(n, circuits);
  }
  std::sort(independent.begin(), independent.end(), by_size_then_mask);
  const auto indep = membership(n, independent);

  AxiomReport report;
  report.checks.push_back(check_i1(indep));
  report.checks.push_back(check_i2(g, independent, indep));
  report.checks.push_back(check_i3(g, independent, indep));
  report.checks.push_back(AxiomCheck{"IM", AxiomStatus::pass, {}, "automatic on a finite ground set"});
  report.checks.push_back(check_c1(circuits));
  report.checks.push_back(check_c2(g, circuits));
  report.checks.push_back(check_c3(g, circuits));
  return report;
}

}  // namespace mkappa
