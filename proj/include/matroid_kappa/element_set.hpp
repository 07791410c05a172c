#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matroid_kappa/bits.hpp"

namespace mkappa {

// Finite ground set of opaque labels. Canonical order is insertion order and
// never changes after construction.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Mask full_mask() const noexcept { return low_mask(labels_.size()); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  // Throws DomainError for unknown labels.
  std::size_t require_index(std::string_view label) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

GroundSetPtr make_ground_set(std::vector<std::string> labels);

// Two universes are compatible when they are the same object or carry the
// same labels in the same order.
bool same_universe(const GroundSetPtr& a, const GroundSetPtr& b);

class ElementSet {
 public:
  ElementSet(GroundSetPtr universe, Mask members);

  static ElementSet empty(GroundSetPtr universe) { return ElementSet(std::move(universe), 0); }
  static ElementSet full(const GroundSetPtr& universe) { return ElementSet(universe, universe->full_mask()); }
  static ElementSet from_labels(GroundSetPtr universe, std::span<const std::string> labels);

  const GroundSetPtr& universe() const noexcept { return universe_; }
  Mask mask() const noexcept { return members_; }
  std::size_t size() const noexcept { return popcount(members_); }
  bool empty() const noexcept { return members_ == 0; }

  bool contains(std::size_t index) const noexcept { return index < 64 && (members_ & bit(index)) != 0; }
  bool contains(std::string_view label) const;
  bool subset_of(const ElementSet& other) const;
  bool disjoint_from(const ElementSet& other) const;

  ElementSet complement() const { return ElementSet(universe_, universe_->full_mask() & ~members_); }
  ElementSet with(std::size_t index) const { return ElementSet(universe_, members_ | bit(index)); }
  ElementSet without(std::size_t index) const { return ElementSet(universe_, members_ & ~bit(index)); }

  ElementSet operator|(const ElementSet& o) const;
  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator-(const ElementSet& o) const;

  std::vector<std::size_t> indices() const { return bit_indices(members_); }
  std::vector<std::string> labels() const;
  // "{a,b,c}" in canonical order.
  std::string to_string() const;

  // Same labels, expressed over another universe. DomainError when a label
  // is missing there.
  ElementSet rebased(const GroundSetPtr& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_ && same_universe(a.universe_, b.universe_);
  }

 private:
  void require_same_universe(const ElementSet& o) const;

  GroundSetPtr universe_;
  Mask members_;
};

// Parses "a,b,c" (whitespace around labels ignored, empty string is the empty set).
std::vector<std::string> split_labels(std::string_view text);

}  // namespace mkappa
