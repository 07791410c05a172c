#include "matroid_kappa/windows.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "matroid_kappa/errors.hpp"

namespace mkappa {
namespace {

// Largest common independent set of two matroids on the bits of `ground`,
// by shortest augmenting paths in the exchange graph.
template <typename Indep1, typename Indep2>
std::size_t intersection_size(Mask ground, Indep1 indep1, Indep2 indep2) {
  Mask current = 0;
  const auto elems = bit_indices(ground);
  const std::size_t n = elems.size();
  while (true) {
    std::vector<int> prev(n, -2);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
      const Mask e = bit(elems[i]);
      if (!(current & e) && indep1(current | e)) {
        prev[i] = -1;
        queue.push_back(i);
      }
    }
    int sink = -1;
    while (!queue.empty() && sink < 0) {
      const auto i = queue.front();
      queue.pop_front();
      const Mask e = bit(elems[i]);
      if (!(current & e) && indep2(current | e)) {
        sink = static_cast<int>(i);
        break;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (prev[j] != -2) continue;
        const Mask f = bit(elems[j]);
        bool edge = false;
        if (current & e) {
          // e in I, f outside: I - e + f independent in M1
          edge = !(current & f) && indep1((current & ~e) | f);
        } else {
          // e outside, f in I: I - f + e independent in M2
          edge = (current & f) && indep2((current & ~f) | e);
        }
        if (edge) {
          prev[j] = static_cast<int>(i);
          queue.push_back(j);
        }
      }
    }
    if (sink < 0) return popcount(current);
    for (int v = sink; v >= 0; v = prev[static_cast<std::size_t>(v)]) current ^= bit(elems[static_cast<std::size_t>(v)]);
  }
}

std::vector<std::string> labels_in(const Matroid& w, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (w.ground()->index_of(l)) out.push_back(l);
  }
  return out;
}

std::vector<std::string> parse_list(const std::string& text) {
  auto out = split_labels(text);
  if (out.empty()) throw DomainError("certificate lists no elements");
  return out;
}

}  // namespace

ConnValue window_kappa_between(const Matroid& w, const ElementSet& x, const ElementSet& y) {
  w.require_member_set(x);
  w.require_member_set(y);
  if (!x.disjoint_from(y)) throw DomainError("kappa_between: X and Y meet in " + (x & y).to_string());
  const Mask xm = x.mask();
  const Mask ym = y.mask();
  const Mask z = w.full_mask() & ~(xm | ym);
  const Mask bx = greedy_extend(w, 0, xm);
  const Mask by = greedy_extend(w, 0, ym);
  const auto nu = intersection_size(
      z, [&](Mask s) { return w.independent(s | bx); }, [&](Mask s) { return w.independent(s | by); });
  return ConnValue(popcount(bx) + popcount(by) + nu - w.full_rank());
}

std::vector<std::string> Certificate::left_in_window(const InfiniteFamily& f, std::size_t n) const {
  const auto colon = description.find(':');
  const std::string kind = description.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string{} : description.substr(colon + 1);
  const auto labels = f.window_labels(n);
  std::vector<std::string> out;
  if (kind == "cut") {
    const int i = std::stoi(arg);
    for (const auto& l : labels) {
      const auto [name, j] = *InfiniteFamily::parse_positional(l);
      if ((name == "rung" && j <= i) || (name != "rung" && j < i)) out.push_back(l);
    }
  } else if (kind == "split") {
    const auto names = parse_list(arg);
    for (const auto& l : labels) {
      const auto pos = InfiniteFamily::parse_positional(l);
      if (pos && std::find(names.begin(), names.end(), pos->first) != names.end()) out.push_back(l);
    }
  } else if (kind == "finite") {
    const auto listed = parse_list(arg);
    for (const auto& l : labels) {
      if (std::find(listed.begin(), listed.end(), l) != listed.end()) out.push_back(l);
    }
  } else if (kind == "cofinite") {
    const auto listed = parse_list(arg);
    for (const auto& l : labels) {
      if (std::find(listed.begin(), listed.end(), l) == listed.end()) out.push_back(l);
    }
  } else {
    throw DomainError("unknown certificate template '" + kind + "'");
  }
  return out;
}

Certificate certified_separation(const InfiniteFamily& f, const std::string& description, std::size_t max_window,
                                 std::size_t first_window) {
  const auto colon = description.find(':');
  if (colon == std::string::npos) throw DomainError("certificate '" + description + "' is not template:argument");
  const std::string kind = description.substr(0, colon);
  const std::string arg = description.substr(colon + 1);
  Certificate cert{description, 0, 0, {}};
  if (kind == "cut") {
    if (f.kind() != InfiniteFamily::Kind::double_ladder) throw DomainError("cut certificates need the double ladder");
    try {
      std::size_t used = 0;
      (void)std::stoi(arg, &used);
      if (used != arg.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("cut position '" + arg + "' is not an integer");
    }
    cert.kappa_bound = 1;
  } else if (kind == "split") {
    if (f.kind() != InfiniteFamily::Kind::graph_rule && f.kind() != InfiniteFamily::Kind::double_ladder) {
      throw DomainError("split certificates need a graph family");
    }
    const auto names = parse_list(arg);
    std::set<std::string> left_rows;
    std::set<std::string> right_rows;
    for (const auto& n : names) {
      if (std::none_of(f.templates().begin(), f.templates().end(), [&](const EdgeTemplate& t) { return t.name == n; })) {
        throw DomainError("split names unknown template '" + n + "'");
      }
    }
    for (const auto& t : f.templates()) {
      auto& rows = std::find(names.begin(), names.end(), t.name) != names.end() ? left_rows : right_rows;
      rows.insert(t.tail_row);
      rows.insert(t.head_row);
    }
    for (const auto& r : left_rows) {
      if (right_rows.contains(r)) throw DomainError("split shares vertex row '" + r + "' across its sides");
    }
    cert.kappa_bound = 0;
  } else if (kind == "finite" || kind == "cofinite") {
    if (f.kind() != InfiniteFamily::Kind::infinite_uniform) {
      throw DomainError(kind + " certificates need an infinite uniform family");
    }
    const auto listed = parse_list(arg);
    if (!f.exactness_radius(listed)) throw DomainError("certificate names an element outside the family");
    cert.kappa_bound = std::min(listed.size(), f.uniform_rank());
  } else {
    throw DomainError("unknown certificate template '" + kind + "'");
  }
  cert.order_k = cert.kappa_bound + 1;
  for (std::size_t n = first_window; n <= max_window; ++n) {
    const Matroid w = f.window(n);
    const auto left = w.set(labels_in(w, cert.left_in_window(f, n)));
    const auto value = kappa_mask(w, left.mask());
    if (value > cert.kappa_bound) {
      throw InvariantError("certificate " + description + " has kappa " + std::to_string(value) + " in window " +
                           std::to_string(n) + ", above its bound " + std::to_string(cert.kappa_bound));
    }
    cert.validated.emplace_back(n, value);
  }
  return cert;
}

StabilizationReport stabilized_kappa_between(const InfiniteFamily& f, const std::vector<std::string>& x,
                                             const std::vector<std::string>& y, const StabilizationPolicy& policy) {
  StabilizationReport report{f.id(), x, y, {}, std::nullopt, std::nullopt, std::nullopt};
  std::vector<std::string> both = x;
  both.insert(both.end(), y.begin(), y.end());
  const auto radius = f.exactness_radius(both, policy.max_window);
  if (!radius) throw DomainError("X or Y has an element outside window " + std::to_string(policy.max_window));
  for (const auto& l : x) {
    if (std::find(y.begin(), y.end(), l) != y.end()) throw DomainError("X and Y share " + l);
  }
  for (std::size_t n = *radius; n <= policy.max_window; ++n) {
    const Matroid w = f.window(n);
    const auto value = window_kappa_between(w, w.set(x), w.set(y));
    if (!report.values.empty() && value < report.values.back().second) {
      throw InvariantError("windowed kappa decreased from window " + std::to_string(report.values.back().first) +
                           " to " + std::to_string(n));
    }
    report.values.emplace_back(n, value);
  }
  std::size_t start = report.values.size() - 1;
  while (start > 0 && report.values[start - 1].second == report.values.back().second) --start;
  if (report.values.size() - start >= std::max<std::size_t>(policy.plateau_length, 1)) {
    report.stable_at = report.values[start].first;
  }
  if (policy.certificate) {
    auto cert = certified_separation(f, *policy.certificate, policy.max_window, *radius);
    const auto left = cert.left_in_window(f, policy.max_window);
    auto inside = [&](const std::vector<std::string>& s) {
      return std::all_of(s.begin(), s.end(), [&](const std::string& l) {
        return std::find(left.begin(), left.end(), l) != left.end();
      });
    };
    auto outside = [&](const std::vector<std::string>& s) {
      return std::none_of(s.begin(), s.end(), [&](const std::string& l) {
        return std::find(left.begin(), left.end(), l) != left.end();
      });
    };
    if (!((inside(x) && outside(y)) || (inside(y) && outside(x)))) {
      throw DomainError("certificate " + cert.description + " does not separate X from Y");
    }
    const ConnValue bound(cert.kappa_bound);
    if (bound < report.values.back().second) {
      throw InvariantError("certificate bound " + bound.to_string() + " is below the windowed lower bound " +
                           report.values.back().second.to_string());
    }
    if (report.stable_at && bound == report.values.back().second) report.certified_value = bound;
    report.certificate = std::move(cert);
  }
  return report;
}

WindowedLinkingResult windowed_linking(const InfiniteFamily& f, const std::vector<std::string>& x,
                                       const std::vector<std::string>& y, const StabilizationPolicy& policy) {
  auto report = stabilized_kappa_between(f, x, y, policy);
  if (!report.certified_value) throw PreconditionError("windowed_linking needs a certified kappa value");
  const std::size_t n = *report.stable_at;
  const Matroid w = f.window(n);
  auto linking = constructive_linking(w, w.set(x), w.set(y));
  if (linking.achieved != *report.certified_value) {
    throw InvariantError("windowed_linking: window " + std::to_string(n) + " reaches " +
                         linking.achieved.to_string() + ", certified " + report.certified_value->to_string());
  }
  return WindowedLinkingResult{n, std::move(linking), true, std::move(report)};
}

PartitionScan scan_rung_partitions(const InfiniteFamily& f, std::size_t n, const std::string& template_name,
                                   const Budget& budget) {
  const Matroid w = f.window(n);
  Mask rungs = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto pos = InfiniteFamily::parse_positional(w.ground()->label(i));
    if (pos && pos->first == template_name) rungs |= bit(i);
  }
  if (rungs == 0) throw DomainError("window has no '" + template_name + "' elements");
  const auto width = popcount(rungs);
  if (width > budget.linking_free) {
    throw CapacityError("rung scan over " + std::to_string(width) + " elements exceeds budget " +
                        std::to_string(budget.linking_free));
  }
  PartitionScan scan;
  scan.window = n;
  for (Mask packed = 0; packed < (Mask{1} << width); ++packed) {
    const Mask a = deposit(packed, rungs);
    const Matroid minor = take_minor(w, MinorSpec{w.set_of(a), w.set_of(rungs & ~a)});
    ++scan.partitions_checked;
    if (minor.size() >= 2 && is_k_connected(minor, 2, budget)) scan.connected_contractions.push_back(w.set_of(a));
  }
  const Matroid rails = delete_set(w, w.set_of(rungs));
  scan.full_deletion_disconnects = !is_k_connected(rails, 2, budget);
  return scan;
}

}  // namespace mkappa
