#include "matroid_kappa/description.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "matroid_kappa/constructions.hpp"
#include "matroid_kappa/errors.hpp"

namespace mkappa {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

GraphEdge parse_edge(const std::string& token, std::size_t line) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError(line, "edge '" + token + "' is not label=u-v");
  const auto dash = token.find('-', eq + 1);
  if (dash == std::string::npos || dash == eq + 1 || dash + 1 == token.size()) {
    throw ParseError(line, "edge '" + token + "' is not label=u-v");
  }
  return GraphEdge{token.substr(0, eq), token.substr(eq + 1, dash - eq - 1), token.substr(dash + 1)};
}

std::vector<std::uint8_t> parse_row(const std::string& text, std::size_t line) {
  std::vector<std::uint8_t> row;
  for (char c : text) {
    if (c == '0' || c == '1') {
      row.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '\t' && c != ',') {
      throw ParseError(line, std::string("matrix entry '") + c + "' is not 0 or 1");
    }
  }
  return row;
}

std::vector<std::string> parse_set_line(std::string text, std::size_t line) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError(line, "unbalanced braces in '" + text + "'");
    text = text.substr(1, text.size() - 2);
  }
  try {
    return split_labels(text);
  } catch (const DomainError& e) {
    throw ParseError(line, e.what());
  }
}

const std::regex kKeyLine(R"(^([A-Za-z-]+)\s*:(.*)$)");

const std::vector<std::string> kKeys = {"type",     "elements", "k",    "edges",    "matrix", "independent",
                                        "circuits", "base",     "op",   "contract", "delete", "parts"};

std::filesystem::path resolve(const std::filesystem::path& origin, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !origin.empty()) return origin.parent_path() / path;
  return path;
}

Matroid build(const MatroidDescription& d, int depth);

Matroid load(const std::filesystem::path& path, int depth) {
  if (depth > 32) throw DomainError("file-derived descriptions nest more than 32 levels at " + path.string());
  return build(load_description(path), depth + 1);
}

Matroid build(const MatroidDescription& d, int depth) {
  if (d.type == "uniform") return uniform_matroid(d.elements, d.k);
  if (d.type == "graphic") {
    if (d.elements.empty()) return graphic_matroid(d.edges);
    std::map<std::string, GraphEdge> by_label;
    for (const auto& e : d.edges) by_label.emplace(e.label, e);
    std::vector<GraphEdge> ordered;
    for (const auto& l : d.elements) {
      auto it = by_label.find(l);
      if (it == by_label.end()) throw DomainError("element " + l + " has no edge");
      ordered.push_back(it->second);
    }
    if (ordered.size() != d.edges.size()) throw DomainError("edges and elements list different labels");
    return graphic_matroid(ordered);
  }
  if (d.type == "linear-gf2") return linear_gf2_matroid(d.elements, d.matrix);
  if (d.type == "explicit") {
    const auto fam = family_of(d);
    auto sets = fam.sets;
    if (fam.kind == SetFamily::Kind::circuits) {
      if (fam.ground->size() > Budget{}.axiom_check) {
        throw CapacityError("explicit circuit family over more than " + std::to_string(Budget{}.axiom_check) +
                            " elements");
      }
      sets = independent_sets_from_circuits(fam.ground->size(), sets);
    }
    return explicit_matroid(fam.ground, sets);
  }
  if (d.type == "file-derived") {
    if (d.base.empty()) throw DomainError("file-derived description without base");
    Matroid base = load(d.base, depth);
    if (d.op == "dual") return dual(base);
    if (d.op == "minor") {
      return take_minor(base, MinorSpec{base.set(d.contract), base.set(d.remove)});
    }
    if (d.op == "sum") {
      std::vector<Matroid> parts{base};
      for (const auto& p : d.parts) parts.push_back(load(p, depth));
      return direct_sum(parts);
    }
    throw DomainError("unknown op '" + d.op + "'");
  }
  throw DomainError("unknown matroid type '" + d.type + "'");
}

}  // namespace

MatroidDescription parse_description(std::istream& in, const std::filesystem::path& origin) {
  MatroidDescription d;
  std::string block;  // "matrix", "independent" or "circuits" while rows follow
  std::vector<std::size_t> family_lines;
  std::size_t elements_line = 0;
  std::size_t line_no = 0;
  std::string raw;
  std::map<std::string, std::size_t> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::smatch match;
    const bool key_line = std::regex_match(line, match, kKeyLine) &&
                          std::find(kKeys.begin(), kKeys.end(), match[1].str()) != kKeys.end();
    if (!key_line) {
      if (block == "matrix") {
        d.matrix.push_back(parse_row(line, line_no));
      } else if (block == "independent" || block == "circuits") {
        d.family.push_back(parse_set_line(line, line_no));
        family_lines.push_back(line_no);
      } else if (std::regex_match(line, match, kKeyLine)) {
        throw ParseError(line_no, "unknown key '" + match[1].str() + "'");
      } else {
        throw ParseError(line_no, "expected 'key: value'");
      }
      continue;
    }
    const std::string key = match[1].str();
    const std::string value = trim(match[2].str());
    if (!seen.emplace(key, line_no).second) throw ParseError(line_no, "duplicate key '" + key + "'");
    block.clear();
    if (key == "type") {
      static const std::vector<std::string> types = {"uniform", "graphic", "linear-gf2", "explicit", "file-derived"};
      if (std::find(types.begin(), types.end(), value) == types.end()) {
        throw ParseError(line_no, "unknown type '" + value + "'");
      }
      d.type = value;
    } else if (key == "elements") {
      d.elements = words(value);
      elements_line = line_no;
    } else if (key == "k") {
      std::size_t used = 0;
      try {
        d.k = std::stoul(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) throw ParseError(line_no, "k must be a natural number");
    } else if (key == "edges") {
      for (const auto& t : words(value)) d.edges.push_back(parse_edge(t, line_no));
    } else if (key == "matrix") {
      block = key;
      if (!value.empty()) d.matrix.push_back(parse_row(value, line_no));
    } else if (key == "independent" || key == "circuits") {
      if (seen.contains(key == "independent" ? "circuits" : "independent")) {
        throw ParseError(line_no, "both independent and circuits given");
      }
      block = key;
      d.family_is_circuits = key == "circuits";
      if (!value.empty()) {
        d.family.push_back(parse_set_line(value, line_no));
        family_lines.push_back(line_no);
      }
    } else if (key == "base") {
      d.base = resolve(origin, value);
    } else if (key == "op") {
      d.op = value;
    } else if (key == "contract") {
      d.contract = words(value);
    } else if (key == "delete") {
      d.remove = words(value);
    } else if (key == "parts") {
      for (const auto& p : words(value)) d.parts.push_back(resolve(origin, p));
    }
  }
  if (d.type.empty()) throw ParseError(line_no + 1, "missing 'type'");
  auto require = [&](const char* key) {
    if (!seen.contains(key)) throw ParseError(line_no + 1, "type " + d.type + " needs '" + key + "'");
  };
  if (d.type == "uniform") {
    require("elements");
    require("k");
  } else if (d.type == "graphic") {
    require("edges");
  } else if (d.type == "linear-gf2") {
    require("elements");
    require("matrix");
    for (std::size_t r = 0; r < d.matrix.size(); ++r) {
      if (d.matrix[r].size() != d.elements.size()) {
        throw ParseError(seen["matrix"] + 1 + r, "matrix row has " + std::to_string(d.matrix[r].size()) +
                                                     " entries, expected " + std::to_string(d.elements.size()));
      }
    }
  } else if (d.type == "explicit") {
    require("elements");
    if (!seen.contains("independent") && !seen.contains("circuits")) {
      throw ParseError(line_no + 1, "explicit type needs 'independent' or 'circuits'");
    }
    std::map<std::string, int> known;
    for (const auto& e : d.elements) known[e] = 1;
    for (std::size_t i = 0; i < d.family.size(); ++i) {
      for (const auto& l : d.family[i]) {
        if (!known.contains(l)) throw ParseError(family_lines[i], "unknown element '" + l + "'");
      }
    }
  } else if (d.type == "file-derived") {
    require("base");
    require("op");
  }
  if (elements_line != 0) {
    std::map<std::string, int> dup;
    for (const auto& e : d.elements) {
      if (++dup[e] > 1) throw ParseError(elements_line, "duplicate element '" + e + "'");
    }
  }
  return d;
}

MatroidDescription load_description(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  return parse_description(in, path);
}

Matroid build_matroid(const MatroidDescription& d) { return build(d, 0); }

Matroid load_matroid(const std::filesystem::path& path) { return load(path, 0); }

SetFamily family_of(const MatroidDescription& d) {
  if (d.type != "explicit") throw DomainError("only explicit descriptions carry a set family");
  auto ground = make_ground_set(d.elements);
  SetFamily fam{ground, d.family_is_circuits ? SetFamily::Kind::circuits : SetFamily::Kind::independent_sets, {}};
  for (const auto& labels : d.family) fam.sets.push_back(ElementSet::from_labels(ground, labels).mask());
  return fam;
}

std::string to_explicit_description(const Matroid& m) {
  if (m.size() > Budget{}.circuit_enumeration) throw CapacityError("explicit listing over more than 20 elements");
  std::ostringstream out;
  out << "type: explicit\nelements:";
  for (const auto& l : m.ground()->labels()) out << ' ' << l;
  out << "\nindependent:\n";
  const Mask full = m.full_mask();
  for (Mask s = 0;; ++s) {
    if (m.independent(s)) {
      if (s == 0) {
        out << "{}\n";
      } else {
        const auto labels = m.set_of(s).labels();
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
        out << '\n';
      }
    }
    if (s == full) break;
  }
  return out.str();
}

}  // namespace mkappa
