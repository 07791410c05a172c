#include "matroid_kappa/families.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "matroid_kappa/errors.hpp"

namespace mkappa {
namespace {

std::string positional(const std::string& name, long i) { return name + "[" + std::to_string(i) + "]"; }

std::string vertex(const std::string& row, long column) { return row + "(" + std::to_string(column) + ")"; }

// Column range of template i's endpoints relative to i.
std::pair<int, int> offsets(const EdgeTemplate& t) {
  return {std::min(t.tail_offset, t.head_offset), std::max(t.tail_offset, t.head_offset)};
}

void require_window_size(std::size_t count, std::size_t n) {
  if (count > kMaxElements) {
    throw CapacityError("window " + std::to_string(n) + " has " + std::to_string(count) + " elements, more than 64");
  }
}

const std::regex kEndpoint(R"(^\s*([A-Za-z][A-Za-z0-9_]*)\(\s*i\s*(?:([+-])\s*([0-9]+))?\s*\)\s*$)");
const std::regex kName(R"(^[A-Za-z][A-Za-z0-9_]*$)");

}  // namespace

InfiniteFamily InfiniteFamily::double_ladder() {
  InfiniteFamily f("double-ladder", Kind::double_ladder);
  f.templates_ = {{"rung", "t", 0, "b", 0}, {"railT", "t", 0, "t", 1}, {"railB", "b", 0, "b", 1}};
  return f;
}

InfiniteFamily InfiniteFamily::omega_tree() { return InfiniteFamily("omega-tree", Kind::omega_tree); }

InfiniteFamily InfiniteFamily::infinite_uniform(std::size_t k) {
  InfiniteFamily f("infinite-uniform(" + std::to_string(k) + ")", Kind::infinite_uniform);
  f.k_ = k;
  return f;
}

InfiniteFamily InfiniteFamily::graph_rule(std::string id, std::vector<EdgeTemplate> templates) {
  if (templates.empty()) throw DomainError("graph rule without edge templates");
  for (std::size_t a = 0; a < templates.size(); ++a) {
    for (std::size_t b = a + 1; b < templates.size(); ++b) {
      if (templates[a].name == templates[b].name) throw DomainError("template " + templates[a].name + " given twice");
    }
  }
  InfiniteFamily f(std::move(id), Kind::graph_rule);
  f.templates_ = std::move(templates);
  return f;
}

InfiniteFamily InfiniteFamily::parse_graph_rule(const std::string& rule) {
  std::vector<EdgeTemplate> templates;
  std::size_t start = 0;
  while (start <= rule.size()) {
    auto end = rule.find(';', start);
    if (end == std::string::npos) end = rule.size();
    const std::string part = rule.substr(start, end - start);
    start = end + 1;
    if (part.find_first_not_of(" \t") == std::string::npos) {
      if (end == rule.size()) break;
      throw ParseError(1, "empty template in graph rule");
    }
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw ParseError(1, "template '" + part + "' lacks 'name:'");
    std::string name = part.substr(0, colon);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    if (!std::regex_match(name, kName)) throw ParseError(1, "bad template name '" + name + "'");
    const std::string body = part.substr(colon + 1);
    // The dash separating the endpoints is the first one after a ')'.
    const auto close = body.find(')');
    const auto dash = close == std::string::npos ? std::string::npos : body.find('-', close);
    if (dash == std::string::npos) throw ParseError(1, "template '" + name + "' is not row(i+a)-row(i+b)");
    std::smatch tail;
    std::smatch head;
    const std::string ts = body.substr(0, dash);
    const std::string hs = body.substr(dash + 1);
    if (!std::regex_match(ts, tail, kEndpoint) || !std::regex_match(hs, head, kEndpoint)) {
      throw ParseError(1, "template '" + name + "' is not row(i+a)-row(i+b)");
    }
    auto offset = [](const std::smatch& m) {
      if (!m[2].matched) return 0;
      const int v = std::stoi(m[3].str());
      if (v > 8) throw ParseError(1, "column offsets are limited to 8");
      return m[2].str() == "-" ? -v : v;
    };
    templates.push_back({name, tail[1].str(), offset(tail), head[1].str(), offset(head)});
  }
  try {
    return graph_rule("user-graph-rule", std::move(templates));
  } catch (const DomainError& e) {
    throw ParseError(1, e.what());
  }
}

InfiniteFamily InfiniteFamily::from_id(const std::string& id, const std::string& rule) {
  if (id == "double-ladder") return double_ladder();
  if (id == "omega-tree") return omega_tree();
  if (id == "user-graph-rule") {
    if (rule.empty()) throw DomainError("user-graph-rule needs a rule");
    return parse_graph_rule(rule);
  }
  static const std::regex uniform(R"(^infinite-uniform\(([0-9]+)\)$)");
  std::smatch m;
  if (std::regex_match(id, m, uniform)) return infinite_uniform(std::stoul(m[1].str()));
  throw DomainError("unknown family '" + id + "'");
}

std::vector<std::string> InfiniteFamily::window_labels(std::size_t n) const {
  std::vector<std::string> out;
  const long lo = -static_cast<long>(n);
  const long hi = static_cast<long>(n) + 1;
  switch (kind_) {
    case Kind::infinite_uniform:
      for (std::size_t j = 1; j <= n; ++j) out.push_back(positional("a", static_cast<long>(j)));
      break;
    case Kind::omega_tree:
      for (std::size_t i = 0; i <= n; ++i) {
        out.push_back("e[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j <= n; ++j) out.push_back("e[" + std::to_string(i) + "." + std::to_string(j) + "]");
      }
      break;
    case Kind::double_ladder:
    case Kind::graph_rule:
      for (long i = lo - 8; i <= hi + 8; ++i) {
        for (const auto& t : templates_) {
          const auto [a, b] = offsets(t);
          if (i + a >= lo && i + b <= hi) out.push_back(positional(t.name, i));
        }
      }
      break;
  }
  require_window_size(out.size(), n);
  return out;
}

Matroid InfiniteFamily::window(std::size_t n) const {
  const auto labels = window_labels(n);
  switch (kind_) {
    case Kind::infinite_uniform:
      return uniform_matroid(labels, k_);
    case Kind::omega_tree: {
      std::vector<GraphEdge> edges;
      for (const auto& l : labels) {
        const auto inner = l.substr(2, l.size() - 3);
        const auto dot = inner.find('.');
        if (dot == std::string::npos) {
          edges.push_back({l, "root", "v" + inner});
        } else {
          edges.push_back({l, "v" + inner.substr(0, dot), "v" + inner});
        }
      }
      return graphic_matroid(edges);
    }
    case Kind::double_ladder:
    case Kind::graph_rule: {
      std::vector<GraphEdge> edges;
      for (const auto& l : labels) {
        const auto [name, i] = *parse_positional(l);
        const auto& t = *std::find_if(templates_.begin(), templates_.end(),
                                      [&](const EdgeTemplate& e) { return e.name == name; });
        edges.push_back({l, vertex(t.tail_row, i + t.tail_offset), vertex(t.head_row, i + t.head_offset)});
      }
      return graphic_matroid(edges);
    }
  }
  throw InvariantError("unhandled family kind");
}

std::optional<std::size_t> InfiniteFamily::exactness_radius(const std::vector<std::string>& labels,
                                                            std::size_t limit) const {
  std::size_t radius = 0;
  for (const auto& l : labels) {
    std::size_t need = 0;
    if (kind_ == Kind::omega_tree) {
      static const std::regex tree(R"(^e\[([0-9]+)(?:\.([0-9]+))?\]$)");
      std::smatch m;
      if (!std::regex_match(l, m, tree)) return std::nullopt;
      need = std::stoul(m[1].str());
      if (m[2].matched) need = std::max<std::size_t>(need, std::stoul(m[2].str()));
    } else {
      const auto pos = parse_positional(l);
      if (!pos) return std::nullopt;
      const auto [name, i] = *pos;
      if (kind_ == Kind::infinite_uniform) {
        if (name != "a" || i < 1) return std::nullopt;
        need = static_cast<std::size_t>(i);
      } else {
        auto it = std::find_if(templates_.begin(), templates_.end(),
                               [&](const EdgeTemplate& e) { return e.name == name; });
        if (it == templates_.end()) return std::nullopt;
        long n = 0;
        for (int off : {it->tail_offset, it->head_offset}) {
          const long c = i + off;
          n = std::max({n, -c, c - 1});
        }
        need = static_cast<std::size_t>(n);
      }
    }
    if (need > limit) return std::nullopt;
    radius = std::max(radius, need);
  }
  return radius;
}

std::optional<std::pair<std::string, int>> InfiniteFamily::parse_positional(const std::string& label) {
  static const std::regex pos(R"(^([A-Za-z][A-Za-z0-9_]*)\[(-?[0-9]+)\]$)");
  std::smatch m;
  if (!std::regex_match(label, m, pos)) return std::nullopt;
  if (m[2].str().size() > 6) return std::nullopt;
  return std::pair{m[1].str(), std::stoi(m[2].str())};
}

}  // namespace mkappa
