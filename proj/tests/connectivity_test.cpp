#include <gtest/gtest.h>

#include <random>

#include "matroid_kappa/connectivity.hpp"
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
Matroid two_triangles() { return direct_sum({triangle("e"), triangle("f")}); }
Matroid k4() {
  return graphic_matroid({{"ab", "a", "b"}, {"ac", "a", "c"}, {"ad", "a", "d"},
                          {"bc", "b", "c"}, {"bd", "b", "d"}, {"cd", "c", "d"}});
}

}  // namespace

TEST(ConnValue, OrderingAndText) {
  EXPECT_LT(ConnValue(3), ConnValue::infinite());
  EXPECT_EQ(ConnValue::infinite().to_string(), "inf");
  EXPECT_EQ(ConnValue(2).to_string(), "2");
  EXPECT_THROW((void)ConnValue::infinite().value(), InvariantError);
}

TEST(Separation, SizeClause) {
  const auto t = triangle();
  Separation s{t.set({"e1"}), t.set({"e2", "e3"}), kappa(t, t.set({"e1"})), std::nullopt};
  EXPECT_EQ(s.kappa, ConnValue(1));
  EXPECT_FALSE(is_k_separation(s, 2));
  EXPECT_FALSE(is_k_separation(s, 1));
}

TEST(Del, Examples) {
  const auto u = u24();
  EXPECT_EQ(del(u, u.set({"a", "b"}), u.none()), ConnValue(0));
  const auto u12 = uniform_matroid({"a", "b"}, 1);
  EXPECT_EQ(brute_del(u12, 1, 2), 1u);
  EXPECT_EQ(del(u12, u12.set({"a"}), u12.set({"b"})), ConnValue(1));
  const auto t = triangle();
  EXPECT_EQ(brute_del(t, 1, 6), 1u);
  EXPECT_EQ(del(t, t.set({"e1"}), t.set({"e2", "e3"})), ConnValue(1));
  EXPECT_THROW(del(u, u.set({"a", "b", "c"}), u.none()), PreconditionError);
}

TEST(Del, GreedyMatchesExhaustiveAndBruteForce) {
  std::mt19937 rng(17);
  for (const auto& [name, m] : corpus()) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 20; ++t) {
      const Mask i = greedy_extend(m, 0, pick(rng));
      const Mask j = greedy_extend(m, 0, pick(rng));
      const auto expected = brute_del(m, i, j);
      ASSERT_EQ(del(m, m.set_of(i), m.set_of(j)), ConnValue(expected)) << name;
      ASSERT_EQ(del_exhaustive(m, m.set_of(i), m.set_of(j)), ConnValue(expected)) << name;
    }
  }
}

TEST(Del, IndependentOfBasisChoice) {
  std::mt19937 rng(23);
  auto all = corpus();
  for (auto& g : large_corpus()) all.push_back(std::move(g));
  for (const auto& [name, m] : all) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 3; ++t) {
      const Mask x = pick(rng);
      const Mask rest = m.full_mask() & ~x;
      const auto bx = brute_bases(restrict_to(m, m.set_of(x)));
      const auto by = brute_bases(restrict_to(m, m.set_of(rest)));
      const auto sub_x = restrict_to(m, m.set_of(x)).ground();
      const auto sub_y = restrict_to(m, m.set_of(rest)).ground();
      const auto expected = kappa(m, m.set_of(x));
      std::uniform_int_distribution<std::size_t> ix(0, bx.size() - 1), iy(0, by.size() - 1);
      for (int pair = 0; pair < 50; ++pair) {
        const auto b1 = ElementSet(sub_x, bx[ix(rng)]).rebased(m.ground());
        const auto b2 = ElementSet(sub_y, by[iy(rng)]).rebased(m.ground());
        ASSERT_EQ(del(m, b1, b2), expected) << name;
      }
    }
  }
}

TEST(Kappa, Examples) {
  const auto u = u24();
  EXPECT_EQ(kappa(u, u.none()), ConnValue(0));
  EXPECT_EQ(brute_kappa(u, 3), 2u);
  EXPECT_EQ(kappa(u, u.set({"a", "b"})), ConnValue(2));
  const auto t = triangle();
  EXPECT_EQ(brute_kappa(t, 1), 1u);
  EXPECT_EQ(kappa(t, t.set({"e1"})), ConnValue(1));
}

TEST(Kappa, FiniteEquivalence) {
  const auto u = u24();
  for (Mask x = 0; x < 16; ++x) EXPECT_TRUE(kappa_finite_equivalence(u, u.set_of(x)));
  const auto g = k4();
  for (Mask x = 0; x < 64; ++x) EXPECT_TRUE(kappa_finite_equivalence(g, g.set_of(x)));
  EXPECT_EQ(kappa(g, g.all()), ConnValue(0));
  for (const auto& [name, m] : corpus()) {
    for (Mask x = 0; x <= m.full_mask(); ++x) {
      ASSERT_EQ(kappa(m, m.set_of(x)), ConnValue(brute_kappa(m, x))) << name;
      ASSERT_EQ(kappa_mask(m, x), brute_kappa(m, x)) << name;
    }
  }
}

TEST(Kappa, DualityInvariance) {
  auto all = corpus();
  for (auto& g : large_corpus()) all.push_back(std::move(g));
  for (const auto& [name, m] : all) {
    const auto d = dual(m);
    for (Mask x = 0; x <= m.full_mask(); ++x) ASSERT_EQ(kappa_mask(m, x), kappa_mask(d, x)) << name;
  }
}

TEST(Kappa, Submodularity) {
  for (const auto& [name, m] : corpus()) {
    if (m.size() > 6) continue;
    std::vector<std::size_t> k(m.full_mask() + 1);
    for (Mask x = 0; x <= m.full_mask(); ++x) k[x] = kappa_mask(m, x);
    for (Mask x = 0; x <= m.full_mask(); ++x) {
      for (Mask y = 0; y <= m.full_mask(); ++y) ASSERT_GE(k[x] + k[y], k[x | y] + k[x & y]) << name;
    }
  }
  std::mt19937 rng(29);
  for (const auto& [name, m] : large_corpus()) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 2000; ++t) {
      const Mask x = pick(rng), y = pick(rng);
      ASSERT_GE(kappa_mask(m, x) + kappa_mask(m, y), kappa_mask(m, x | y) + kappa_mask(m, x & y)) << name;
    }
  }
}

TEST(KappaBetween, Examples) {
  const auto u = u24();
  EXPECT_EQ(kappa_between(u, u.set({"a", "b"}), u.set({"c", "d"})), kappa(u, u.set({"a", "b"})));
  const auto g = k4();
  EXPECT_EQ(brute_kappa_between(g, g.set({"ab"}).mask(), g.set({"cd"}).mask()), 1u);
  EXPECT_EQ(kappa_between(g, g.set({"ab"}), g.set({"cd"})), ConnValue(1));
  const auto s = two_triangles();
  EXPECT_EQ(kappa_between(s, s.set({"e1"}), s.set({"f2"})), ConnValue(0));
  EXPECT_THROW(kappa_between(u, u.set({"a"}), u.set({"a"})), DomainError);
  Budget b;
  b.kappa_between_free = 1;
  EXPECT_THROW(kappa_between(u, u.set({"a"}), u.set({"b"}), b), CapacityError);
}

TEST(KappaBetween, MatchesBruteForceWithWitness) {
  std::mt19937 rng(31);
  for (const auto& [name, m] : corpus()) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 12; ++t) {
      const Mask x = pick(rng);
      const Mask y = pick(rng) & ~x;
      const auto w = kappa_between_witness(m, m.set_of(x), m.set_of(y));
      const auto expected = brute_kappa_between(m, x, y);
      ASSERT_EQ(w.value, ConnValue(expected)) << name;
      const Mask u = w.argmin.mask();
      ASSERT_TRUE(subset_of(x, u) && (u & y) == 0) << name;
      ASSERT_EQ(kappa_mask(m, u), expected) << name;
    }
  }
}

TEST(FindSeparation, Examples) {
  const auto f = free_matroid({"a", "b"});
  const auto s = find_separation(f, 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->left, f.set({"a"}));
  EXPECT_EQ(s->order_k, std::optional<std::size_t>(1));
  EXPECT_FALSE(find_separation(u24(), 2).has_value());
  EXPECT_TRUE(is_k_connected(u24(), 3));
  EXPECT_FALSE(find_separation(triangle(), 2).has_value());
}

TEST(FindSeparation, ConnectivityMatchesBruteForce) {
  for (const auto& [name, m] : corpus()) {
    for (std::size_t k = 1; k <= 4; ++k) ASSERT_EQ(is_k_connected(m, k), brute_k_connected(m, k)) << name << " " << k;
  }
}

TEST(FindSeparation, TwoConnectedIffConnected) {
  for (const auto& [name, m] : corpus()) {
    bool loop = false;
    for (std::size_t e = 0; e < m.size(); ++e) loop = loop || !m.independent(bit(e));
    if (loop || m.size() < 2) continue;
    ASSERT_EQ(is_k_connected(m, 2), components(m).blocks.size() == 1) << name;
  }
}

TEST(GrowPair, Examples) {
  const auto u = u24();
  const auto a = u.set({"a"}), c = u.set({"c"});
  EXPECT_FALSE(grow_pair(u, a, c, a, c, 2).has_value());
  const auto p = grow_pair(u, u.set({"a", "b"}), u.set({"c", "d"}), a, c, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(u.ground()->label(p->first), "b");
  EXPECT_EQ(u.ground()->label(p->second), "d");
  const auto s = two_triangles();
  EXPECT_FALSE(grow_pair(s, s.set({"e1", "e2"}), s.set({"f1"}), s.none(), s.none(), 1).has_value());
}

TEST(GrowPair, AlwaysExistsBelowTheTarget) {
  std::mt19937 rng(37);
  for (const auto& [name, m] : corpus()) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 6; ++t) {
      const Mask x = pick(rng);
      const Mask y = pick(rng) & ~x;
      const auto target = brute_kappa_between(m, x, y);
      Mask xp = 0, yp = 0;
      for (std::size_t k = 1; k <= target; ++k) {
        const auto p = grow_pair(m, m.set_of(x), m.set_of(y), m.set_of(xp), m.set_of(yp), k);
        ASSERT_TRUE(p.has_value()) << name;
        xp |= bit(p->first);
        yp |= bit(p->second);
        ASSERT_EQ(brute_kappa_between(m, xp, yp), k) << name;
      }
    }
  }
}

TEST(Minors, ConnectivityIsMonotone) {
  std::mt19937 rng(41);
  for (const auto& [name, m] : corpus()) {
    std::uniform_int_distribution<Mask> pick(0, m.full_mask());
    for (int t = 0; t < 6; ++t) {
      const Mask x = pick(rng);
      const Mask y = pick(rng) & ~x;
      const Mask free = m.full_mask() & ~(x | y);
      const Mask c = pick(rng) & free;
      const Mask d = pick(rng) & free & ~c;
      const auto n = take_minor(m, {m.set_of(c), m.set_of(d)});
      const auto value = kappa_between(n, m.set_of(x).rebased(n.ground()), m.set_of(y).rebased(n.ground()));
      ASSERT_LE(value, ConnValue(brute_kappa_between(m, x, y))) << name;
    }
  }
}
