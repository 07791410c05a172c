#pragma once

#include <cstddef>
#include <optional>

namespace mkappa {

// Element-count ceilings for the exponential algorithms. Exceeding one raises
// CapacityError instead of running for hours.
struct Budget {
  std::size_t circuit_enumeration = 20;
  std::size_t axiom_check = 12;
  std::size_t kappa_between_free = 20;
  std::size_t separation_scan = 20;
  std::size_t linking_free = 16;

  // Sets every free-element ceiling (not the axiom checker's) to n.
  static Budget uniform(std::size_t n) {
    Budget b;
    b.circuit_enumeration = n;
    b.kappa_between_free = n;
    b.separation_scan = n;
    b.linking_free = n;
    return b;
  }

  // Defaults overridden by MATROID_KAPPA_BUDGET when that variable is set.
  static Budget from_environment();
};

}  // namespace mkappa
