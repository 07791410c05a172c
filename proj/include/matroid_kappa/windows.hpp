#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroid_kappa/connectivity.hpp"
#include "matroid_kappa/families.hpp"
#include "matroid_kappa/linking.hpp"

namespace mkappa {

// Exact kappa_W(X, Y) for windows too large for the exhaustive scan:
// kappa(X, Y) = r(X) + r(Y) - r(E) + max |I|, I common independent in
// (W/X)|Z and (W/Y)|Z with Z = E \ (X + Y). Augmenting-path matroid
// intersection.
ConnValue window_kappa_between(const Matroid& w, const ElementSet& x, const ElementSet& y);

// Symbolic infinite separation (U, E \ U) with a proven bound on kappa(U).
struct Certificate {
  std::string description;   // e.g. "cut:2"
  std::size_t kappa_bound = 0;
  std::size_t order_k = 0;   // kappa_bound + 1
  // Per-window values kappa_window(U & window) checked against the bound.
  std::vector<std::pair<std::size_t, std::size_t>> validated;

  // Labels of U inside window n of the family.
  std::vector<std::string> left_in_window(const InfiniteFamily& f, std::size_t n) const;
};

// Templates:
//   double-ladder      cut:i            U = rungs <= i, rails < i; kappa <= 1
//   graph rules        split:a,b,...    U = edges of the listed templates;
//                                       kappa = 0 when no vertex row is shared
//   infinite-uniform   finite:l1,l2     U finite; kappa <= min(|U|, k)
//                      cofinite:l1,l2   U = E minus the labels; kappa <= min(|labels|, k)
// Validated on windows first_window .. max_window; DomainError for an
// inapplicable template, InvariantError if a window exceeds the bound.
Certificate certified_separation(const InfiniteFamily& f, const std::string& description,
                                 std::size_t max_window, std::size_t first_window = 0);

struct StabilizationPolicy {
  std::size_t max_window = 8;
  std::size_t plateau_length = 3;
  std::optional<std::string> certificate;
};

struct StabilizationReport {
  std::string family;
  std::vector<std::string> x;
  std::vector<std::string> y;
  std::vector<std::pair<std::size_t, ConnValue>> values;  // (window, kappa lower bound)
  std::optional<std::size_t> stable_at;
  std::optional<ConnValue> certified_value;
  std::optional<Certificate> certificate;
};

// Windowed kappa(X, Y) from the first window holding X + Y up to
// policy.max_window. Values never decrease; a decrease raises
// InvariantError. The value is certified only when a certificate separating
// X from Y has a bound equal to the final plateau.
StabilizationReport stabilized_kappa_between(const InfiniteFamily& f, const std::vector<std::string>& x,
                                             const std::vector<std::string>& y,
                                             const StabilizationPolicy& policy = {});

struct WindowedLinkingResult {
  std::size_t window = 0;
  LinkingResult linking;  // partition over window(window)
  // Everything outside the window is deleted as well.
  bool delete_outside_window = true;
  StabilizationReport report;
};

// Constructive linking inside the stabilizing window. PreconditionError
// without a certified value.
WindowedLinkingResult windowed_linking(const InfiniteFamily& f, const std::vector<std::string>& x,
                                       const std::vector<std::string>& y,
                                       const StabilizationPolicy& policy = {});

// Exhaustive rung-partition scan on a double-ladder-like window: every
// partition (A, B) of the listed elements and whether window/A - B is
// 2-connected.
struct PartitionScan {
  std::size_t window = 0;
  std::size_t partitions_checked = 0;
  std::vector<ElementSet> connected_contractions;  // A for each 2-connected minor
  bool full_deletion_disconnects = false;
};

PartitionScan scan_rung_partitions(const InfiniteFamily& f, std::size_t n,
                                   const std::string& template_name = "rung",
                                   const Budget& budget = {});

}  // namespace mkappa
