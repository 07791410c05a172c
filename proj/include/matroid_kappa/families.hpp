#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroid_kappa/matroid.hpp"
#include "matroid_kappa/representations.hpp"

namespace mkappa {

// Edge template of a periodic graph rule: for each column i the edge
// `name[i]` joins vertex tail_row(i + tail_offset) to head_row(i + head_offset).
struct EdgeTemplate {
  std::string name;
  std::string tail_row;
  int tail_offset = 0;
  std::string head_row;
  int head_offset = 0;
};

// Windowed presentation of an infinite finitary matroid. window(n) is a
// finite restriction of the infinite matroid, window(n) is a restriction of
// window(n + 1), and element labels are positional so that they survive
// window growth. Independence of a finite set is final in any window that
// contains it.
class InfiniteFamily {
 public:
  enum class Kind { double_ladder, omega_tree, infinite_uniform, graph_rule };

  static InfiniteFamily double_ladder();
  // Depth-two tree truncation with n + 1 branches per level. Illustrative
  // only: it is finitary (free) and does not model the double-ray matroid.
  static InfiniteFamily omega_tree();
  static InfiniteFamily infinite_uniform(std::size_t k);
  // Periodic graph; window n keeps the edges whose endpoints all lie in
  // columns -n .. n + 1.
  static InfiniteFamily graph_rule(std::string id, std::vector<EdgeTemplate> templates);
  // "rung:t(i)-b(i);railT:t(i)-t(i+1)"; ParseError (line 1) when malformed.
  static InfiniteFamily parse_graph_rule(const std::string& rule);

  // double-ladder | omega-tree | infinite-uniform(k) | user-graph-rule(...)
  static InfiniteFamily from_id(const std::string& id, const std::string& rule = {});

  const std::string& id() const noexcept { return id_; }
  Kind kind() const noexcept { return kind_; }
  std::size_t uniform_rank() const noexcept { return k_; }
  const std::vector<EdgeTemplate>& templates() const noexcept { return templates_; }

  // Labels of window(n) in canonical order.
  std::vector<std::string> window_labels(std::size_t n) const;
  Matroid window(std::size_t n) const;

  // Smallest n whose window contains every label; nullopt when some label is
  // not an element of the family or needs a window beyond `limit`.
  std::optional<std::size_t> exactness_radius(const std::vector<std::string>& labels,
                                              std::size_t limit = 64) const;

  // Template name and column of a graph-family label such as "rung[-2]".
  static std::optional<std::pair<std::string, int>> parse_positional(const std::string& label);

 private:
  InfiniteFamily(std::string id, Kind kind) : id_(std::move(id)), kind_(kind) {}

  std::string id_;
  Kind kind_;
  std::size_t k_ = 0;
  std::vector<EdgeTemplate> templates_;
};

}  // namespace mkappa
