#pragma once

#include <string>
#include <vector>

#include "matroid_kappa/budget.hpp"
#include "matroid_kappa/element_set.hpp"

namespace mkappa {

// Candidate set system for the axiom checker: either a family of
// independent sets or a family of circuits over a ground set.
struct SetFamily {
  enum class Kind { independent_sets, circuits };

  GroundSetPtr ground;
  Kind kind = Kind::independent_sets;
  std::vector<Mask> sets;
};

enum class AxiomStatus { pass, fail, not_checked };

struct AxiomCheck {
  std::string axiom;  // "I1", "I2", "I3", "IM", "C1", "C2", "C3"
  AxiomStatus status = AxiomStatus::pass;
  // Smallest violating configuration, rendered with labels. Empty on pass.
  std::string witness;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck& check(const std::string& axiom) const;
};

// Exhaustive check of (I1)-(I3), (IM) and (C1)-(C3). The family of the other
// kind is derived (independent sets = sets containing no circuit; circuits =
// minimal non-members). CapacityError when the ground set exceeds
// budget.axiom_check elements.
AxiomReport check_axioms(const SetFamily& candidate, const Budget& budget = {});

// Independent sets of a circuit family: every set containing no member.
std::vector<Mask> independent_sets_from_circuits(std::size_t n, const std::vector<Mask>& circuits);
// Minimal sets outside an independent family.
std::vector<Mask> circuits_from_independent_sets(std::size_t n, const std::vector<Mask>& independent);

}  // namespace mkappa
