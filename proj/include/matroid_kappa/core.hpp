#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "matroid_kappa/budget.hpp"
#include "matroid_kappa/matroid.hpp"

namespace mkappa {

// Minimal dependent set. Constructed only by functions that verified it.
struct Circuit {
  ElementSet members;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

bool is_independent(const Matroid& m, const ElementSet& s);
std::size_t rank(const Matroid& m, const ElementSet& s);

bool is_basis(const Matroid& m, const ElementSet& b);
bool is_circuit(const Matroid& m, const ElementSet& c);

// Greedy maximal independent J with I <= J <= X, scanning X \ I in canonical
// order. PreconditionError if I is dependent, DomainError if I is not inside X.
ElementSet extend_to_basis(const Matroid& m, const ElementSet& i, const ElementSet& x);

// Mask-level greedy extension; no checks.
Mask greedy_extend(const Matroid& m, Mask start, Mask within);

// All inclusion-minimal dependent sets, ordered by mask value.
std::vector<Circuit> enumerate_circuits(const Matroid& m, const Budget& budget = {});
std::vector<Mask> circuit_masks(const Matroid& m, const Budget& budget = {});

// The unique circuit inside B + x.
Circuit fundamental_circuit(const Matroid& m, const ElementSet& basis, std::size_t x);
Circuit fundamental_circuit(const Matroid& m, const ElementSet& basis, std::string_view x);

// Mask-level fundamental circuit of x against an independent set b with
// b + x dependent.
Mask fundamental_circuit_mask(const Matroid& m, Mask b, std::size_t x);

// Shrinks `within` to a circuit that contains every element of `through`.
// Polynomial: greedy deletion guided by component tests. Returns 0 when no
// such circuit exists. `through` may hold one or two elements.
Mask circuit_through(const Matroid& m, Mask through, Mask within);

// Connected components computed from fundamental circuits of the canonical
// basis. Polynomial; agrees with the circuit-closure definition.
std::vector<Mask> fundamental_components(const Matroid& m, Mask within);

}  // namespace mkappa
