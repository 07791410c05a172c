#include "matroid_kappa/matroid.hpp"

#include "matroid_kappa/errors.hpp"

namespace mkappa {

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::explicit_family: return "explicit";
    case Representation::uniform: return "uniform";
    case Representation::graphic: return "graphic";
    case Representation::linear_gf2: return "linear-gf2";
    case Representation::derived: return "derived";
  }
  return "unknown";
}

std::size_t IndependenceOracle::rank(Mask s) const {
  Mask kept = 0;
  std::size_t r = 0;
  for_each_bit(s, [&](std::size_t i) {
    if (independent(kept | bit(i))) {
      kept |= bit(i);
      ++r;
    }
  });
  return r;
}

Matroid::Matroid(GroundSetPtr ground, std::shared_ptr<const IndependenceOracle> oracle,
                 Representation representation, std::string summary)
    : ground_(std::move(ground)),
      oracle_(std::move(oracle)),
      representation_(representation),
      summary_(std::move(summary)) {
  if (!ground_ || !oracle_) throw DomainError("matroid needs a ground set and an oracle");
  if (!oracle_->independent(0)) throw DomainError("oracle rejects the empty set");
  for_each_bit(ground_->full_mask(), [&](std::size_t i) {
    if (oracle_->independent(basis_ | bit(i))) basis_ |= bit(i);
  });
  full_rank_ = popcount(basis_);
}

ElementSet Matroid::set(std::initializer_list<std::string_view> labels) const {
  Mask m = 0;
  for (auto l : labels) m |= bit(ground_->require_index(l));
  return ElementSet(ground_, m);
}

ElementSet Matroid::set(const std::vector<std::string>& labels) const {
  return ElementSet::from_labels(ground_, labels);
}

void Matroid::require_member_set(const ElementSet& s) const {
  if (!same_universe(s.universe(), ground_)) {
    throw DomainError("set " + s.to_string() + " is not over the matroid's ground set");
  }
}

bool oracle_equal(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  IndexMap to_b([&] {
    std::vector<std::size_t> idx(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto j = b.ground()->index_of(a.ground()->label(i));
      if (!j) return std::vector<std::size_t>{};
      idx[i] = *j;
    }
    return idx;
  }());
  if (to_b.size() != a.size()) return false;
  const Mask limit = a.full_mask();
  for (Mask s = 0;; ++s) {
    if (a.independent(s) != b.independent(to_b.to_parent(s))) return false;
    if (s == limit) break;
  }
  return true;
}

}  // namespace mkappa
