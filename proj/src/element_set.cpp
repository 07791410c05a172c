#include "matroid_kappa/element_set.hpp"

#include <cstdlib>

#include "matroid_kappa/budget.hpp"
#include "matroid_kappa/errors.hpp"

namespace mkappa {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxElements) {
    throw CapacityError("ground set has " + std::to_string(labels_.size()) + " elements; at most " +
                        std::to_string(kMaxElements) + " supported");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw DomainError("empty element label");
    if (!index_.emplace(labels_[i], i).second) throw DomainError("duplicate element label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw DomainError("unknown element '" + std::string(label) + "'");
}

GroundSetPtr make_ground_set(std::vector<std::string> labels) {
  return std::make_shared<const GroundSet>(std::move(labels));
}

bool same_universe(const GroundSetPtr& a, const GroundSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ElementSet::ElementSet(GroundSetPtr universe, Mask members) : universe_(std::move(universe)), members_(members) {
  if (!universe_) throw DomainError("element set without a universe");
  if (!mkappa::subset_of(members_, universe_->full_mask())) throw DomainError("members outside the universe");
}

ElementSet ElementSet::from_labels(GroundSetPtr universe, std::span<const std::string> labels) {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(universe->require_index(l));
  return ElementSet(std::move(universe), m);
}

bool ElementSet::contains(std::string_view label) const {
  auto i = universe_->index_of(label);
  return i && contains(*i);
}

void ElementSet::require_same_universe(const ElementSet& o) const {
  if (!same_universe(universe_, o.universe_)) throw DomainError("element sets over different universes");
}

bool ElementSet::subset_of(const ElementSet& other) const {
  require_same_universe(other);
  return mkappa::subset_of(members_, other.members_);
}

bool ElementSet::disjoint_from(const ElementSet& other) const {
  require_same_universe(other);
  return (members_ & other.members_) == 0;
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  require_same_universe(o);
  return ElementSet(universe_, members_ | o.members_);
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  require_same_universe(o);
  return ElementSet(universe_, members_ & o.members_);
}

ElementSet ElementSet::operator-(const ElementSet& o) const {
  require_same_universe(o);
  return ElementSet(universe_, members_ & ~o.members_);
}

std::vector<std::string> ElementSet::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for_each_bit(members_, [&](std::size_t i) { out.push_back(universe_->label(i)); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_bit(members_, [&](std::size_t i) {
    if (!first) s += ',';
    s += universe_->label(i);
    first = false;
  });
  return s + "}";
}

ElementSet ElementSet::rebased(const GroundSetPtr& other) const {
  if (same_universe(universe_, other)) return ElementSet(other, members_);
  Mask m = 0;
  for_each_bit(members_, [&](std::size_t i) { m |= bit(other->require_index(universe_->label(i))); });
  return ElementSet(other, m);
}

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (piece.empty()) throw DomainError("empty label in set list '" + std::string(text) + "'");
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Budget Budget::from_environment() {
  const char* env = std::getenv("MATROID_KAPPA_BUDGET");
  if (env == nullptr || *env == '\0') return Budget{};
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') throw DomainError("MATROID_KAPPA_BUDGET is not a number: '" + std::string(env) + "'");
  return Budget::uniform(v);
}

}  // namespace mkappa
