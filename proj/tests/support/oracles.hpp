#pragma once

// Slow, independent reimplementations used to cross-check the library.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "linkq/linkq.hpp"

namespace oracle {

using linkq::Element;
using linkq::FiniteQuandle;

/// Linking numbers straight from the passages: M(i, j) sums the signs of
/// labels whose Over passage is on j and Under passage on i.
inline std::vector<std::vector<std::int64_t>> linking_numbers(
    const linkq::LinkDiagram& d) {
  const std::size_t mu = d.component_count();
  std::map<linkq::CrossingLabel, std::size_t> over, under;
  std::map<linkq::CrossingLabel, int> sign;
  for (std::size_t i = 0; i < mu; ++i)
    for (const auto& p : d.components[i]) {
      (p.role == linkq::Role::Over ? over : under)[p.crossing] = i;
      sign[p.crossing] = p.sign;
    }
  std::vector<std::vector<std::int64_t>> m(mu, std::vector<std::int64_t>(mu));
  for (const auto& [c, s] : sign)
    if (over[c] != under[c]) m[under[c]][over[c]] += s;
  return m;
}

/// Number of connected components of the graph on `alive` vertices.
inline std::size_t component_count(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::set<std::size_t>& alive) {
  std::map<std::size_t, std::size_t> parent;
  for (std::size_t v : alive) parent[v] = v;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : edges)
    if (alive.count(a) && alive.count(b)) parent[find(a)] = find(b);
  std::set<std::size_t> roots;
  for (std::size_t v : alive) roots.insert(find(v));
  return roots.size();
}

/// Articulation points by deleting each vertex in turn.
inline std::vector<std::size_t> articulation_points(
    const linkq::LinkingGraph& g) {
  const std::set<std::size_t> all(g.vertices.begin(), g.vertices.end());
  const std::size_t base = component_count(g.edges, all);
  std::vector<std::size_t> out;
  for (std::size_t v : g.vertices) {
    auto rest = all;
    rest.erase(v);
    if (component_count(g.edges, rest) > base) out.push_back(v);
  }
  return out;
}

/// Lattice equality by mutual containment of the generating rows.
inline bool same_lattice(const linkq::LatticeBasis& a,
                         const linkq::LatticeBasis& b) {
  for (const auto& r : a.rows())
    if (!linkq::contains(b, r)) return false;
  for (const auto& r : b.rows())
    if (!linkq::contains(a, r)) return false;
  return true;
}

/// |Z^m / S| by breadth-first search over cosets, telling cosets apart only
/// with membership tests. Gives up (nullopt) past `limit` cosets.
inline std::optional<std::size_t> coset_count(const linkq::LatticeBasis& s,
                                              std::size_t limit) {
  const std::size_t m = s.ambient_rank();
  std::vector<linkq::IntVector> reps{linkq::IntVector(m, 0)};
  for (std::size_t head = 0; head < reps.size(); ++head)
    for (std::size_t c = 0; c < m; ++c) {
      linkq::IntVector v = reps[head];
      v[c] += 1;
      bool seen = false;
      for (const auto& r : reps) {
        linkq::IntVector diff = v;
        for (std::size_t k = 0; k < m; ++k) diff[k] -= r[k];
        if (linkq::contains(s, diff)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        if (reps.size() == limit) return std::nullopt;
        reps.push_back(std::move(v));
      }
    }
  return reps.size();
}

/// Quandle isomorphism by backtracking over element bijections, with both
/// sides' tables checked on every assigned pair.
inline std::optional<std::vector<Element>> isomorphism(const FiniteQuandle& a,
                                                       const FiniteQuandle& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<Element> f(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y]) continue;
      f[x] = y;
      bool ok = true;
      for (Element u = 0; u <= x && ok; ++u)
        for (Element v = 0; v <= x && ok; ++v) {
          const Element w = a(u, v);
          if (w <= x && f[w] != b(f[u], f[v])) ok = false;
        }
      if (!ok) continue;
      used[y] = true;
      if (rec(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

/// Colorings counted by checking every crossing on every arc assignment.
inline std::uint64_t count_colorings(const linkq::LinkDiagram& d,
                                     const FiniteQuandle& t) {
  const auto arcs = linkq::arc_table(d);
  const std::size_t n = arcs.arc_count();
  std::vector<Element> color(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& c : arcs.crossings) {
      const Element in = color[c.under_in_arc], out = color[c.under_out_arc],
                    over = color[c.over_arc];
      if (c.writhe > 0 ? out != t(in, over) : in != t(out, over)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t k = n;
    while (k > 0 && ++color[k - 1] == t.size()) color[--k] = 0;
    if (k == 0) return count;
  }
}

/// Stabilizer of orbit b in a materialized Q(S): the y in the box
/// [-r, r]^m whose composite translation fixes the zero coset of orbit b.
inline std::vector<linkq::IntVector> stabilizer_box(
    const linkq::MaterializedQuandle& mq, std::size_t m, std::size_t b,
    std::int64_t r) {
  std::vector<Element> reps(m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t x = 0; x < mq.orbit.size(); ++x)
      if (mq.orbit[x] == c) {
        reps[c] = static_cast<Element>(x);
        break;
      }
  std::vector<linkq::IntVector> out;
  std::vector<std::int64_t> y(m, -r);
  for (;;) {
    if (linkq::apply_translations(mq.quandle, reps, y, reps[b]) == reps[b]) {
      linkq::IntVector v(m);
      for (std::size_t k = 0; k < m; ++k) v[k] = y[k];
      out.push_back(std::move(v));
    }
    std::size_t k = m;
    while (k > 0 && ++y[k - 1] > r) y[--k] = -r;
    if (k == 0) return out;
  }
}

}  // namespace oracle
