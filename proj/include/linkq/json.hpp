#pragma once

// JSON forms of the library's values. Component, generator and base indices
// are 1-based in every JSON document.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkq/groups.hpp"
#include "linkq/lattice.hpp"
#include "linkq/linking.hpp"
#include "linkq/tcquandle.hpp"

namespace linkq::json {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json integer(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

inline json matrix(const LinkingMatrix& m) {
  return {{"mu", m.mu()}, {"l", m.rows()}};
}

/// Accepts {"mu": m, "l": [[...], ...]}; throws std::invalid_argument.
inline LinkingMatrix matrix_from(const json& j) {
  const auto rows = j.at("l").get<std::vector<std::vector<std::int64_t>>>();
  if (j.at("mu").get<std::size_t>() != rows.size())
    throw std::invalid_argument("matrix JSON: mu does not match row count");
  return LinkingMatrix::from_rows(rows);
}

inline json graph(const LinkingGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a + 1, b + 1});
  return {{"vertices", one_based(g.vertices)}, {"edges", edges}};
}

inline json partition(const std::vector<std::vector<std::size_t>>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(one_based(c));
  return out;
}

inline json basis(const LatticeBasis& b) {
  json rows = json::array();
  for (const IntVector& r : b.rows()) {
    json row = json::array();
    for (const Integer& x : r) row.push_back(integer(x));
    rows.push_back(row);
  }
  return rows;
}

inline json family(const SubgroupFamily& f) {
  json subgroups = json::array();
  for (const LatticeBasis& b : f.subgroups) subgroups.push_back(basis(b));
  return {{"m", f.m}, {"subgroups", subgroups}};
}

inline json certificate(const IsoCertificate& c) {
  json signs = c.signs.empty() ? json(nullptr) : json(c.signs);
  return {{"perm", one_based(c.perm)}, {"signs", signs}};
}

inline json presentation(const GroupPresentation& p) {
  json relators = json::array();
  for (const Word& w : p.relators) {
    json word = json::array();
    for (const Letter& l : w.letters())
      word.push_back({l.generator + 1, l.exponent});
    relators.push_back(word);
  }
  return {{"gens", p.generators}, {"relators", relators}};
}

inline json saktra(const SaktraCertificate& c) {
  json sublinks = json::array();
  for (const SublinkSign& s : c.sublinks)
    sublinks.push_back({{"components", one_based(s.components)},
                        {"sign", s.sign}});
  return {{"perm", one_based(c.perm)}, {"sublinks", sublinks}};
}

}  // namespace linkq::json
