#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "matroid_kappa/constructions.hpp"
#include "matroid_kappa/core.hpp"
#include "matroid_kappa/description.hpp"
#include "matroid_kappa/errors.hpp"
#include "support/corpus.hpp"

using namespace mkappa;
using namespace mkappa::testing;

namespace {

const std::filesystem::path kData = DATA_DIR;

MatroidDescription parse(const std::string& text) {
  std::istringstream in(text);
  return parse_description(in, kData / "inline.matroid");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Description, UniformFile) {
  const auto m = load_matroid(kData / "u24.matroid");
  EXPECT_TRUE(oracle_equal(m, uniform_matroid({"a", "b", "c", "d"}, 2)));
}

TEST(Description, GraphicKeepsEdgeOrder) {
  const auto m = load_matroid(kData / "k4.matroid");
  EXPECT_EQ(m.ground()->labels(), (std::vector<std::string>{"ab", "ac", "ad", "bc", "bd", "cd"}));
  EXPECT_EQ(m.full_rank(), 3u);
}

TEST(Description, LinearAndExplicitForms) {
  const auto fano = load_matroid(kData / "fano.matroid");
  EXPECT_EQ(fano.full_rank(), 3u);
  EXPECT_EQ(circuit_masks(fano).size(), 14u);
  const auto u13 = load_matroid(kData / "u13_circuits.matroid");
  EXPECT_TRUE(oracle_equal(u13, uniform_matroid({"a", "b", "c"}, 1)));
  EXPECT_THROW(load_matroid(kData / "not_matroid.matroid"), DomainError);
  const auto family = family_of(load_description(kData / "not_matroid.matroid"));
  EXPECT_EQ(family.sets.size(), 5u);
}

TEST(Description, FileDerived) {
  const auto k4 = load_matroid(kData / "k4.matroid");
  EXPECT_TRUE(oracle_equal(load_matroid(kData / "k4_dual.matroid"), dual(k4)));
  const auto minor = load_matroid(kData / "k4_minor.matroid");
  EXPECT_TRUE(oracle_equal(minor, take_minor(k4, {k4.set({"ab"}), k4.set({"cd"})})));
  const auto sum = build_matroid(parse("type: file-derived\nbase: triangle.matroid\nop: sum\nparts: triangle2.matroid\n"));
  EXPECT_EQ(sum.size(), 6u);
  EXPECT_EQ(circuit_masks(sum).size(), 2u);
}

TEST(Description, CommentsAndBlankLines) {
  const auto d = parse("# heading\n\ntype: uniform   # trailing\nelements: x y\nk: 1\n");
  EXPECT_EQ(d.elements, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(d.k, 1u);
}

TEST(Description, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("type: uniform\nelements: a b\nsize: 2\n"), 3u);
  EXPECT_EQ(error_line("type: uniform\ntype: graphic\n"), 2u);
  EXPECT_EQ(error_line("type: banana\n"), 1u);
  EXPECT_EQ(error_line("type: uniform\nelements: a b\nk: two\n"), 3u);
  EXPECT_EQ(error_line("type: graphic\nedges: e1=u-v e2\n"), 2u);
  EXPECT_EQ(error_line("type: linear-gf2\nelements: a b\nmatrix:\n1 0\n1 2\n"), 5u);
  EXPECT_EQ(error_line("type: explicit\nelements: a b\nindependent:\n{}\n{a,z}\n"), 5u);
  EXPECT_EQ(error_line("type: uniform\nelements: a a\nk: 1\n"), 2u);
  EXPECT_EQ(error_line("elements: a b\n"), 2u);
  EXPECT_EQ(error_line("just words\n"), 1u);
}

TEST(Description, ExplicitRoundTrip) {
  for (const auto& [name, m] : corpus()) {
    if (m.size() > 6) continue;
    const auto back = build_matroid(parse(to_explicit_description(m)));
    ASSERT_TRUE(oracle_equal(back, m)) << name;
  }
}
