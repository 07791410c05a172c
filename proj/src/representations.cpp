#include "matroid_kappa/representations.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "matroid_kappa/axioms.hpp"
#include "matroid_kappa/errors.hpp"

namespace mkappa {
namespace {

class UniformOracle final : public IndependenceOracle {
 public:
  explicit UniformOracle(std::size_t k) : k_(k) {}
  bool independent(Mask s) const override { return popcount(s) <= k_; }
  std::size_t rank(Mask s) const override { return std::min(popcount(s), k_); }

 private:
  std::size_t k_;
};

// Union-find over at most 128 vertices, rebuilt on every call.
class GraphicOracle final : public IndependenceOracle {
 public:
  GraphicOracle(std::vector<std::pair<std::uint8_t, std::uint8_t>> ends, std::size_t vertices)
      : ends_(std::move(ends)), vertices_(vertices) {}

  bool independent(Mask s) const override { return forest_size(s, true) == popcount(s); }
  std::size_t rank(Mask s) const override { return forest_size(s, false); }

 private:
  std::size_t forest_size(Mask s, bool stop_on_cycle) const {
    std::array<std::uint8_t, 2 * kMaxElements> parent{};
    for (std::size_t v = 0; v < vertices_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    auto find = [&](std::uint8_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    std::size_t joined = 0;
    bool cycle = false;
    for_each_bit(s, [&](std::size_t e) {
      if (cycle) return;
      const auto a = find(ends_[e].first);
      const auto b = find(ends_[e].second);
      if (a == b) {
        if (stop_on_cycle) cycle = true;
        return;
      }
      parent[a] = b;
      ++joined;
    });
    return cycle ? joined + 2 * kMaxElements : joined;
  }

  std::vector<std::pair<std::uint8_t, std::uint8_t>> ends_;
  std::size_t vertices_;
};

// Columns stored as row bitmasks; rank by xor-basis elimination.
class Gf2Oracle final : public IndependenceOracle {
 public:
  explicit Gf2Oracle(std::vector<Mask> columns) : columns_(std::move(columns)) {}

  bool independent(Mask s) const override { return rank(s) == popcount(s); }
  std::size_t rank(Mask s) const override {
    std::array<Mask, 64> pivot{};
    std::size_t r = 0;
    for_each_bit(s, [&](std::size_t c) {
      Mask v = columns_[c];
      while (v != 0) {
        const auto p = static_cast<std::size_t>(std::countr_zero(v));
        if (pivot[p] == 0) {
          pivot[p] = v;
          ++r;
          return;
        }
        v ^= pivot[p];
      }
    });
    return r;
  }

 private:
  std::vector<Mask> columns_;
};

class ExplicitOracle final : public IndependenceOracle {
 public:
  explicit ExplicitOracle(const std::vector<Mask>& sets) : sets_(sets.begin(), sets.end()) {}
  bool independent(Mask s) const override { return sets_.contains(s); }

 private:
  std::unordered_set<Mask> sets_;
};

}  // namespace

Matroid uniform_matroid(std::vector<std::string> labels, std::size_t k) {
  const auto n = labels.size();
  auto ground = make_ground_set(std::move(labels));
  return Matroid(ground, std::make_shared<UniformOracle>(k), Representation::uniform,
                 "U(" + std::to_string(std::min(k, n)) + "," + std::to_string(n) + ")");
}

Matroid free_matroid(std::vector<std::string> labels) {
  const auto n = labels.size();
  return uniform_matroid(std::move(labels), n);
}

Matroid graphic_matroid(const std::vector<GraphEdge>& edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint8_t> vertex;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> ends;
  auto vid = [&](const std::string& v) {
    auto [it, inserted] = vertex.emplace(v, static_cast<std::uint8_t>(vertex.size()));
    (void)inserted;
    return it->second;
  };
  if (edges.size() > kMaxElements) throw CapacityError("graph has more than 64 edges");
  for (const auto& e : edges) {
    labels.push_back(e.label);
    const auto a = vid(e.tail);
    const auto b = vid(e.head);
    ends.emplace_back(a, b);
  }
  const auto vertices = vertex.size();
  auto ground = make_ground_set(std::move(labels));
  return Matroid(ground, std::make_shared<GraphicOracle>(std::move(ends), vertices), Representation::graphic,
                 "graphic(" + std::to_string(vertices) + " vertices, " + std::to_string(edges.size()) + " edges)");
}

Matroid linear_gf2_matroid(std::vector<std::string> labels, const std::vector<std::vector<std::uint8_t>>& rows) {
  if (rows.size() > 64) throw CapacityError("GF(2) matrix has more than 64 rows");
  std::vector<Mask> columns(labels.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != labels.size()) {
      throw DomainError("matrix row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                        " entries, expected " + std::to_string(labels.size()));
    }
    for (std::size_t c = 0; c < labels.size(); ++c) {
      if (rows[r][c] > 1) throw DomainError("GF(2) entries must be 0 or 1");
      if (rows[r][c]) columns[c] |= bit(r);
    }
  }
  const auto shape = std::to_string(rows.size()) + "x" + std::to_string(labels.size());
  auto ground = make_ground_set(std::move(labels));
  return Matroid(ground, std::make_shared<Gf2Oracle>(std::move(columns)), Representation::linear_gf2,
                 "linear-gf2(" + shape + ")");
}

Matroid explicit_matroid(GroundSetPtr ground, const std::vector<Mask>& independent_sets) {
  SetFamily family{ground, SetFamily::Kind::independent_sets, independent_sets};
  const auto report = check_axioms(family);
  if (!report.all_pass()) {
    for (const auto& c : report.checks) {
      if (c.status == AxiomStatus::fail) {
        throw DomainError("explicit family is not a matroid: (" + c.axiom + ") fails, witness " + c.witness);
      }
    }
  }
  return Matroid(std::move(ground), std::make_shared<ExplicitOracle>(independent_sets),
                 Representation::explicit_family,
                 "explicit(" + std::to_string(independent_sets.size()) + " independent sets)");
}

}  // namespace mkappa
