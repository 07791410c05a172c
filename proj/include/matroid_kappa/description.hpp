#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "matroid_kappa/axioms.hpp"
#include "matroid_kappa/matroid.hpp"
#include "matroid_kappa/representations.hpp"

namespace mkappa {

// Parsed matroid description file. Line-oriented:
//
//   type: uniform|graphic|linear-gf2|explicit|file-derived
//   elements: a b c d
//   k: 2                                  (uniform)
//   edges: e1=u-v e2=v-w                  (graphic)
//   matrix:                               (linear-gf2, rows follow)
//   independent: / circuits:              (explicit, one set per line, `{}` = empty)
//   base: other.matroid                   (file-derived)
//   op: dual | minor | sum                (file-derived)
//   contract: a b   delete: c             (file-derived minor)
//   parts: p.matroid q.matroid            (file-derived sum, appended to base)
//
// `#` starts a comment.
struct MatroidDescription {
  std::string type;
  std::vector<std::string> elements;
  std::size_t k = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::uint8_t>> matrix;
  std::vector<std::vector<std::string>> family;
  bool family_is_circuits = false;
  std::filesystem::path base;
  std::string op;
  std::vector<std::string> contract;
  std::vector<std::string> remove;
  std::vector<std::filesystem::path> parts;
};

// ParseError carries the offending line number. Relative paths in
// file-derived descriptions are resolved against `origin`.
MatroidDescription parse_description(std::istream& in, const std::filesystem::path& origin = {});
MatroidDescription load_description(const std::filesystem::path& path);

Matroid build_matroid(const MatroidDescription& d);
Matroid load_matroid(const std::filesystem::path& path);

// Raw set family of an explicit description, for the axiom checker.
SetFamily family_of(const MatroidDescription& d);

// Explicit description listing every independent set of m.
std::string to_explicit_description(const Matroid& m);

}  // namespace mkappa
