#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroid_kappa/matroid.hpp"

namespace mkappa {

// U_{n,k}: every set of at most k elements is independent.
Matroid uniform_matroid(std::vector<std::string> labels, std::size_t k);

// Every subset independent (U_{n,n}).
Matroid free_matroid(std::vector<std::string> labels);

struct GraphEdge {
  std::string label;
  std::string tail;
  std::string head;
};

// Cycle matroid of a finite multigraph. Parallel edges and loops allowed;
// a loop is a one-element circuit.
Matroid graphic_matroid(const std::vector<GraphEdge>& edges);

// Column matroid of a 0/1 matrix over GF(2). rows[r][c] is the entry in
// row r, column c; column c belongs to labels[c].
Matroid linear_gf2_matroid(std::vector<std::string> labels,
                           const std::vector<std::vector<std::uint8_t>>& rows);

// Matroid given by its independent sets. The family is validated with the
// exhaustive axiom checker; DomainError if it is not a matroid.
Matroid explicit_matroid(GroundSetPtr ground, const std::vector<Mask>& independent_sets);

}  // namespace mkappa
