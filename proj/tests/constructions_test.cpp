#include <gtest/gtest.h>

#include <random>

#include "matroid_kappa/constructions.hpp"
#include "matroid_kappa/core.hpp"
#include "matroid_kappa/errors.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mkappa;
using namespace mkappa::testing;

namespace {

Matroid u24() { return uniform_matroid({"a", "b", "c", "d"}, 2); }
Matroid triangle(const std::string& p = "e") {
  return graphic_matroid({{p + "1", p + "u", p + "v"}, {p + "2", p + "v", p + "w"}, {p + "3", p + "w", p + "u"}});
}

std::vector<GraphEdge> k4_edges() {
  return {{"ab", "a", "b"}, {"ac", "a", "c"}, {"ad", "a", "d"}, {"bc", "b", "c"}, {"bd", "b", "d"}, {"cd", "c", "d"}};
}

bool loop_or_coloop_free(const Matroid& m) {
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (!m.independent(bit(e))) return false;
    if (m.rank(m.full_mask() & ~bit(e)) < m.full_rank()) return false;
  }
  return true;
}

}  // namespace

TEST(Dual, Examples) {
  EXPECT_TRUE(oracle_equal(dual(u24()), u24()));
  const auto d = dual(free_matroid({"a", "b", "c"}));
  for (Mask s = 1; s < 8; ++s) EXPECT_FALSE(d.independent(s));
  EXPECT_TRUE(d.independent(0));
  const auto t = dual(triangle());
  EXPECT_TRUE(oracle_equal(t, uniform_matroid({"e1", "e2", "e3"}, 1)));
}

TEST(Dual, IsAnInvolution) {
  auto all = corpus();
  for (auto& g : large_corpus()) all.push_back(std::move(g));
  for (const auto& [name, m] : all) ASSERT_TRUE(oracle_equal(dual(dual(m)), m)) << name;
}

TEST(Restrict, Examples) {
  const auto t = triangle();
  EXPECT_TRUE(oracle_equal(restrict_to(t, t.all()), t));
  const auto u = u24();
  EXPECT_TRUE(oracle_equal(restrict_to(u, u.set({"a", "b"})), free_matroid({"a", "b"})));
  EXPECT_TRUE(oracle_equal(restrict_to(t, t.set({"e1", "e2"})), free_matroid({"e1", "e2"})));
  EXPECT_TRUE(oracle_equal(delete_set(u, u.set({"c", "d"})), free_matroid({"a", "b"})));
}

TEST(Contract, Examples) {
  const auto t = triangle();
  EXPECT_TRUE(oracle_equal(contract(t, t.none()), t));
  const auto c = contract(t, t.set({"e1"}));
  EXPECT_TRUE(is_independent(c, c.set({"e2"})));
  EXPECT_FALSE(is_independent(c, c.set({"e2", "e3"})));
  const auto u = u24();
  EXPECT_TRUE(oracle_equal(contract(u, u.set({"a"})), uniform_matroid({"b", "c", "d"}, 1)));
}

TEST(Contract, MatchesRankDefinition) {
  for (const auto& [name, m] : corpus()) {
    for (Mask c = 0; c <= m.full_mask(); c += 3) {
      const auto mc = contract(m, m.set_of(c));
      const auto& labels = mc.ground()->labels();
      for (Mask s = 0; s <= mc.full_mask(); ++s) {
        Mask parent = 0;
        for_each_bit(s, [&](std::size_t i) { parent |= bit(m.ground()->require_index(labels[i])); });
        ASSERT_EQ(mc.independent(s), brute_minor_independent(m, c, parent)) << name;
      }
    }
  }
}

TEST(Contract, BasisUnionIdentity) {
  // B_X basis of M|X and B basis of M/X give a basis B_X + B of M, and
  // conversely for every basis B of M - X.
  for (const auto& [name, m] : corpus()) {
    for (Mask x = 0; x <= m.full_mask(); ++x) {
      const Mask rest = m.full_mask() & ~x;
      const std::size_t rx = brute_rank(m, x);
      const std::size_t r = m.full_rank();
      std::vector<Mask> bx;
      for_each_subset(x, [&](Mask s) {
        if (popcount(s) == rx && m.independent(s)) bx.push_back(s);
      });
      for_each_subset(rest, [&](Mask b) {
        if (!brute_minor_independent(m, x, b) || popcount(b) != r - rx) return;
        for (Mask s : bx) {
          if (!m.independent(s | b) || popcount(s | b) != r) FAIL() << name;
        }
      });
    }
  }
}

TEST(Minor, Examples) {
  const auto u = u24();
  EXPECT_TRUE(oracle_equal(take_minor(u, {u.none(), u.none()}), u));
  EXPECT_THROW(take_minor(u, {u.set({"a"}), u.set({"a", "b"})}), DomainError);

  const auto k4 = graphic_matroid(k4_edges());
  const auto minor = take_minor(k4, {k4.set({"ab"}), k4.set({"cd"})});
  // Contract a=b: ac, ad, bc, bd on vertices {a, c, d}.
  const auto expected = graphic_matroid({{"ac", "a", "c"}, {"ad", "a", "d"}, {"bc", "a", "c"}, {"bd", "a", "d"}});
  EXPECT_TRUE(oracle_equal(minor, expected));

  const auto contract_first = delete_set(contract(u, u.set({"a"})), contract(u, u.set({"a"})).set({"b"}));
  const auto delete_first = contract(delete_set(u, u.set({"b"})), delete_set(u, u.set({"b"})).set({"a"}));
  EXPECT_TRUE(oracle_equal(contract_first, delete_first));
}

TEST(Minor, ContractionAndDeletionCommute) {
  std::mt19937 rng(5);
  for (const auto& [name, m] : corpus()) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 4; ++t) {
      const Mask c = pick(rng);
      const Mask d = pick(rng) & ~c;
      const auto a = take_minor(m, {m.set_of(c), m.set_of(d)});
      const auto mc = contract(m, m.set_of(c));
      const auto b = contract(delete_set(m, m.set_of(d)), m.set_of(c).rebased(delete_set(m, m.set_of(d)).ground()));
      ASSERT_TRUE(oracle_equal(a, b)) << name;
      ASSERT_TRUE(oracle_equal(a, delete_set(mc, m.set_of(d).rebased(mc.ground())))) << name;
    }
  }
}

TEST(DirectSum, Examples) {
  const auto t = triangle();
  EXPECT_TRUE(oracle_equal(direct_sum({t}), t));
  const auto s = direct_sum({triangle("e"), triangle("f")});
  const auto cs = circuit_masks(s);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(s.set_of(cs[0]), s.set({"e1", "e2", "e3"}));
  EXPECT_EQ(s.set_of(cs[1]), s.set({"f1", "f2", "f3"}));
  const auto p = direct_sum({uniform_matroid({"a", "b"}, 1), uniform_matroid({"c", "d"}, 1)});
  EXPECT_EQ(p.full_rank(), 2u);
  EXPECT_THROW(direct_sum({t, t}), DomainError);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(free_matroid({"a", "b", "c"})).blocks.size(), 3u);
  const auto s = direct_sum({triangle("e"), triangle("f")});
  const auto parts = components(s).blocks;
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], s.set({"e1", "e2", "e3"}));
  EXPECT_EQ(parts[1], s.set({"f1", "f2", "f3"}));
  EXPECT_EQ(components(u24()).blocks.size(), 1u);
}

TEST(Components, MatroidIsTheSumOfItsComponents) {
  for (const auto& [name, m] : corpus()) {
    const auto parts = components(m).blocks;
    ASSERT_EQ(parts.size(), brute_components(m).size()) << name;
    std::vector<Matroid> pieces;
    for (const auto& b : parts) pieces.push_back(restrict_to(m, b));
    const auto sum = direct_sum(pieces);
    for (Mask s = 0; s <= m.full_mask(); ++s) {
      const auto rebased = m.set_of(s).rebased(sum.ground());
      ASSERT_EQ(sum.independent(rebased.mask()), m.independent(s)) << name;
    }
  }
}

TEST(Components, DualHasTheSameComponentsWithoutLoopsOrColoops) {
  for (const auto& [name, m] : corpus()) {
    if (!loop_or_coloop_free(m)) continue;
    ASSERT_EQ(components(m).blocks, components(dual(m)).blocks) << name;
  }
}

TEST(LiftCircuit, Examples) {
  const auto t = triangle();
  EXPECT_EQ(lift_circuit(t, t.none(), t.all()).members, t.all());
  const auto c = contract(t, t.set({"e1"}));
  EXPECT_EQ(lift_circuit(t, t.set({"e1"}), c.set({"e2", "e3"}).rebased(t.ground())).members, t.all());
  const auto u = u24();
  EXPECT_EQ(lift_circuit(u, u.set({"a"}), u.set({"b", "c"})).members, u.set({"a", "b", "c"}));
  EXPECT_THROW(lift_circuit(u, u.set({"a"}), u.set({"b"})), PreconditionError);
}

TEST(LiftCircuit, FirstWitnessInMaskOrder) {
  for (const auto& [name, m] : corpus()) {
    if (m.size() > 6) continue;
    for (Mask x = 1; x <= m.full_mask(); ++x) {
      const auto mx = contract(m, m.set_of(x));
      for (Mask cm : brute_circuits(mx)) {
        const auto c = mx.set_of(cm).rebased(m.ground()).mask();
        Mask expected = 0;
        bool found = false;
        for_each_subset(x, [&](Mask xp) {
          if (!found && brute_is_circuit(m, c | xp)) {
            expected = xp;
            found = true;
          }
        });
        ASSERT_TRUE(found) << name;
        ASSERT_EQ(lift_circuit(m, m.set_of(x), m.set_of(c)).members.mask(), c | expected) << name;
      }
    }
  }
}

TEST(CircuitProperties, CircuitMinusContractedPartIsACircuit) {
  for (const auto& [name, m] : corpus()) {
    for (Mask c : brute_circuits(m)) {
      for_each_subset(c, [&](Mask x) {
        if (x == 0 || x == c) return;
        const auto mx = contract(m, m.set_of(x));
        ASSERT_TRUE(is_circuit(mx, m.set_of(c & ~x).rebased(mx.ground()))) << name;
      });
    }
  }
}

TEST(CircuitProperties, ContractionKeepsElementsInCircuits) {
  for (const auto& [name, m] : corpus()) {
    if (m.size() > 7) continue;
    const auto cs = brute_circuits(m);
    Mask covered = 0;
    for (Mask c : cs) covered |= c;
    for_each_bit(covered, [&](std::size_t e) {
      for_each_subset(m.full_mask() & ~bit(e), [&](Mask x) {
        const auto mx = contract(m, m.set_of(x));
        const auto local = mx.ground()->require_index(m.ground()->label(e));
        ASSERT_NE(circuit_through(mx, bit(local), mx.full_mask()), 0u) << name;
      });
    });
  }
}
