#pragma once

#include <string>
#include <vector>

#include "matroid_kappa/budget.hpp"
#include "matroid_kappa/connectivity.hpp"
#include "matroid_kappa/constructions.hpp"

namespace mkappa {

struct TraceStage {
  std::string stage;                                    // "grow", "Z1", "Z2", ..., "partition", "result"
  std::vector<std::pair<std::string, ElementSet>> sets;  // named sets recorded at this stage
  std::vector<std::pair<std::string, ConnValue>> values; // named kappa values
};

struct LinkingResult {
  MinorSpec spec;  // partition of E \ (X + Y)
  ConnValue achieved;
  ConnValue target;
  std::vector<TraceStage> witness_trace;  // empty unless the constructive path ran
};

// Exact linking by scanning (C, D) in canonical binary order (bit i set =
// contract). Every returned partition is re-verified on the built minor.
// CapacityError when |E \ (X + Y)| > budget.linking_free; InvariantError if
// no partition works.
LinkingResult linking_partition(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                const Budget& budget = {});

struct BreakingCircuits {
  Circuit first;   // meets Y, first \ X a circuit of M/X
  Circuit second;  // meets X, second \ Y a circuit of M/Y
  std::size_t pivot = 0;  // the element e both circuits pass through
  std::vector<ElementSet> comp_x;  // components of M/X avoiding Y
  std::vector<ElementSet> comp_y;  // components of M/Y avoiding X
};

// Two circuits whose addition blocks every extension of the exact
// k-separation (X, Y) of M|(X + Y). PreconditionError if (X, Y) is not an
// exact k-separation there, or if it extends to a k-separation of M.
BreakingCircuits breaking_circuits(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                   std::size_t k, const Budget& budget = {});

// A k-separation of M extending (X, Y), scanning the free elements
// exhaustively; nullopt when none exists.
std::optional<Separation> extending_separation(const Matroid& m, const ElementSet& x,
                                               const ElementSet& y, std::size_t k,
                                               const Budget& budget = {});

// Linking through grow_pair, the Z_t chain of breaking circuits and a final
// exact solve on M|Z_k. Returns the partition for the original X, Y.
LinkingResult constructive_linking(const Matroid& m, const ElementSet& x, const ElementSet& y,
                                   const Budget& budget = {});

struct KappaChain {
  std::vector<Circuit> circuits;  // C_1 ... C_t, circuits of successive contractions
  ElementSet cx;                  // (union C_i) & X
  ElementSet cy;                  // (union C_i) & Y
  ElementSet contracted;          // (union C_i) \ (X + Y)
  bool cx_independent = false;    // in W / contracted
  bool cy_independent = false;
};

// Disjoint circuits C_1..C_t: C_1 a circuit of W meeting X and Y, C_{i+1} a
// circuit of W/(C_1 + ... + C_i) meeting the rest of both. Backtracks over
// the canonical (x, y) choices; PreconditionError if every choice stalls.
KappaChain infinite_kappa_chain(const Matroid& w, const ElementSet& x, const ElementSet& y,
                                std::size_t t_max);

}  // namespace mkappa
