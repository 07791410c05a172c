#pragma once

#include <vector>

#include "matroid_kappa/budget.hpp"
#include "matroid_kappa/core.hpp"

namespace mkappa {

// Contract-set C and delete-set D of a minor M/C - D. Disjointness is
// checked by take_minor, not by the constructor.
struct MinorSpec {
  ElementSet contract;
  ElementSet remove;
};

struct ComponentPartition {
  std::vector<ElementSet> blocks;  // ordered by smallest member
};

// S independent in M* iff r(E \ S) = r(E).
Matroid dual(const Matroid& m);

// M|X. Ground set keeps the canonical order of X.
Matroid restrict_to(const Matroid& m, const ElementSet& x);
// M - D = M|(E \ D).
Matroid delete_set(const Matroid& m, const ElementSet& d);
// M/C. S independent iff S + B_C independent, B_C the greedy basis of C.
Matroid contract(const Matroid& m, const ElementSet& c);
// M/C - D. DomainError when C and D overlap.
Matroid take_minor(const Matroid& m, const MinorSpec& spec);

// Direct sum over pairwise label-disjoint ground sets.
Matroid direct_sum(const std::vector<Matroid>& parts);

// Classes of "lies in a common circuit", by closure over enumerated
// circuits. Throws InvariantError if the closure adds a pair that shares
// no circuit, i.e. if the relation were not already transitive.
ComponentPartition components(const Matroid& m, const Budget& budget = {});

// Circuit C + X' of M for a circuit C of M/X, X' the first subset of X in
// canonical order that works.
Circuit lift_circuit(const Matroid& m, const ElementSet& x, const ElementSet& c);

}  // namespace mkappa
