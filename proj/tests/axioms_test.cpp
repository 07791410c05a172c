#include <gtest/gtest.h>

#include "matroid_kappa/axioms.hpp"
#include "matroid_kappa/errors.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mkappa;
using namespace mkappa::testing;

namespace {

SetFamily independent_family(const Matroid& m) {
  SetFamily f{m.ground(), SetFamily::Kind::independent_sets, {}};
  for (Mask s = 0; s <= m.full_mask(); ++s) {
    if (m.independent(s)) f.sets.push_back(s);
  }
  return f;
}

}  // namespace

TEST(CheckAxioms, FreeMatroidPasses) {
  const auto report = check_axioms(family("ab", SetFamily::Kind::independent_sets, {"", "a", "b", "ab"}));
  EXPECT_TRUE(report.all_pass());
  ASSERT_EQ(report.checks.size(), 7u);
  EXPECT_EQ(report.check("IM").status, AxiomStatus::pass);
}

TEST(CheckAxioms, AugmentationFailureCarriesWitness) {
  const auto report = check_axioms(family("abc", SetFamily::Kind::independent_sets, {"", "a", "b", "c", "ab"}));
  EXPECT_FALSE(report.all_pass());
  const auto& i3 = report.check("I3");
  EXPECT_EQ(i3.status, AxiomStatus::fail);
  EXPECT_EQ(i3.witness, "I={a} not maximal, I'={c} maximal, no x in I'\\I with I+x independent");
  EXPECT_EQ(report.check("I1").status, AxiomStatus::pass);
  EXPECT_EQ(report.check("I2").status, AxiomStatus::pass);
}

TEST(CheckAxioms, TriangleCircuitsPass) {
  const auto report = check_axioms(family("abc", SetFamily::Kind::circuits, {"ab", "bc", "ac"}));
  EXPECT_TRUE(report.all_pass());
  for (const char* c : {"C1", "C2", "C3"}) EXPECT_EQ(report.check(c).status, AxiomStatus::pass) << c;
}

TEST(CheckAxioms, NonMatroidsFailTheExpectedAxiom) {
  for (const auto& [name, f, axiom] : non_matroids()) {
    const auto report = check_axioms(f);
    EXPECT_EQ(report.check(axiom).status, AxiomStatus::fail) << name;
    EXPECT_FALSE(report.check(axiom).witness.empty()) << name;
  }
}

TEST(CheckAxioms, EveryCorpusMatroidPasses) {
  for (const auto& [name, m] : corpus()) {
    ASSERT_TRUE(check_axioms(independent_family(m)).all_pass()) << name;
    SetFamily circuits{m.ground(), SetFamily::Kind::circuits, brute_circuits(m)};
    ASSERT_TRUE(check_axioms(circuits).all_pass()) << name;
  }
}

TEST(CheckAxioms, CapacityLimit) {
  const auto m = uniform_matroid(letters(13), 1);
  EXPECT_THROW(check_axioms(independent_family(m)), CapacityError);
  Budget b;
  b.axiom_check = 4;
  EXPECT_THROW(check_axioms(family("abcde", SetFamily::Kind::circuits, {}), b), CapacityError);
}

TEST(Conversions, CircuitsAndIndependentSetsRoundTrip) {
  for (const auto& [name, m] : corpus()) {
    const auto ind = independent_family(m).sets;
    const auto cs = brute_circuits(m);
    auto derived = circuits_from_independent_sets(m.size(), ind);
    std::sort(derived.begin(), derived.end());
    ASSERT_EQ(derived, cs) << name;
    auto back = independent_sets_from_circuits(m.size(), cs);
    std::sort(back.begin(), back.end());
    ASSERT_EQ(back, ind) << name;
  }
}
