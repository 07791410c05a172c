#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_kappa/bits.hpp"
#include "matroid_kappa/element_set.hpp"

namespace mkappa {

enum class Representation { explicit_family, uniform, graphic, linear_gf2, derived };

std::string_view to_string(Representation r);

// Independence test over masks of a fixed ground set. Implementations must be
// pure and reentrant; a Matroid shares its oracle across copies and threads.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual bool independent(Mask s) const = 0;
  // Default: greedy maximal independent subset in canonical order.
  virtual std::size_t rank(Mask s) const;
};

// Immutable handle: ground set plus oracle plus the rank and canonical basis
// of the whole ground set, computed once at construction.
class Matroid {
 public:
  Matroid(GroundSetPtr ground, std::shared_ptr<const IndependenceOracle> oracle,
          Representation representation, std::string summary);

  const GroundSetPtr& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_->size(); }
  Mask full_mask() const noexcept { return ground_->full_mask(); }

  bool independent(Mask s) const { return oracle_->independent(s); }
  std::size_t rank(Mask s) const { return oracle_->rank(s); }
  std::size_t full_rank() const noexcept { return full_rank_; }
  // Greedy basis of E in canonical order.
  Mask basis_mask() const noexcept { return basis_; }

  Representation representation() const noexcept { return representation_; }
  const std::string& summary() const noexcept { return summary_; }
  const std::shared_ptr<const IndependenceOracle>& oracle() const noexcept { return oracle_; }

  ElementSet set(std::initializer_list<std::string_view> labels) const;
  ElementSet set(const std::vector<std::string>& labels) const;
  ElementSet set_of(Mask m) const { return ElementSet(ground_, m); }
  ElementSet all() const { return ElementSet::full(ground_); }
  ElementSet none() const { return ElementSet::empty(ground_); }

  // Throws DomainError unless s lives over this matroid's ground set.
  void require_member_set(const ElementSet& s) const;

 private:
  GroundSetPtr ground_;
  std::shared_ptr<const IndependenceOracle> oracle_;
  Representation representation_;
  std::string summary_;
  std::size_t full_rank_ = 0;
  Mask basis_ = 0;
};

// Oracle-level equality: both matroids have the same labels and agree on
// every subset. Exponential; n <= 20 or so.
bool oracle_equal(const Matroid& a, const Matroid& b);

}  // namespace mkappa
