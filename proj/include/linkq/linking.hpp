#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkq/diagram.hpp"
#include "linkq/error.hpp"
#include "linkq/limits.hpp"

namespace linkq {

/// Virtual linking numbers of a mu-component link.
///
/// Orientation convention: (*this)(i, j) is the signed count of crossings
/// where component j passes OVER component i, i.e. l_{j/i}. Row i is the
/// vector l_i = sum_j l_{j/i} b_j. Indices are 0-based here and 1-based in
/// every textual/JSON output.
class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(std::size_t mu) : mu_(mu), entries_(mu * mu, 0) {}

  /// Throws std::invalid_argument unless `rows` is square with zero diagonal.
  static LinkingMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows) {
    LinkingMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw std::invalid_argument("linking matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
      if (rows[i][i] != 0)
        throw std::invalid_argument("linking matrix diagonal must be zero");
    }
    return m;
  }

  std::size_t mu() const { return mu_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * mu_ + j];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * mu_ + j];
  }

  std::span<const std::int64_t> row(std::size_t i) const {
    return std::span<const std::int64_t>(entries_).subspan(i * mu_, mu_);
  }

  const std::vector<std::int64_t>& flat() const { return entries_; }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(mu_);
    for (std::size_t i = 0; i < mu_; ++i)
      out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  /// Restriction to the components in `subset` (kept in the given order).
  LinkingMatrix restrict_to(std::span<const std::size_t> subset) const {
    LinkingMatrix out(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = 0; b < subset.size(); ++b)
        out(a, b) = (*this)(subset[a], subset[b]);
    return out;
  }

  bool operator==(const LinkingMatrix&) const = default;
  auto operator<=>(const LinkingMatrix& other) const {
    if (auto c = mu_ <=> other.mu_; c != 0) return c;
    return entries_ <=> other.entries_;
  }

 private:
  std::size_t mu_ = 0;
  std::vector<std::int64_t> entries_;
};

inline LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const std::size_t mu = d.component_count();
  LinkingMatrix m(mu);
  std::unordered_map<CrossingLabel, std::size_t> over_component;
  for (std::size_t j = 0; j < mu; ++j)
    for (const Passage& p : d.components[j])
      if (p.role == Role::Over) over_component[p.crossing] = j;
  for (std::size_t i = 0; i < mu; ++i)
    for (const Passage& p : d.components[i])
      if (p.role == Role::Under) {
        const std::size_t j = over_component.at(p.crossing);
        if (j != i) m(i, j) += p.sign;
      }
  return m;
}

/// Classical links always have symmetric linking matrices.
inline bool is_classical_consistent(const LinkingMatrix& m) {
  for (std::size_t i = 0; i < m.mu(); ++i)
    for (std::size_t j = i + 1; j < m.mu(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Linking graph

/// Simple graph on component indices; only components with some nonzero
/// linking number are vertices.
struct LinkingGraph {
  std::vector<std::size_t> vertices;                       // ascending
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (i < j), sorted

  bool empty() const { return vertices.empty(); }

  std::vector<std::vector<std::size_t>> adjacency(std::size_t n) const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }

  bool operator==(const LinkingGraph&) const = default;
};

inline LinkingGraph linking_graph(const LinkingMatrix& m) {
  LinkingGraph g;
  std::vector<bool> used(m.mu(), false);
  for (std::size_t i = 0; i < m.mu(); ++i)
    for (std::size_t j = i + 1; j < m.mu(); ++j)
      if (m(i, j) != 0 || m(j, i) != 0) {
        g.edges.emplace_back(i, j);
        used[i] = used[j] = true;
      }
  for (std::size_t i = 0; i < m.mu(); ++i)
    if (used[i]) g.vertices.push_back(i);
  return g;
}

namespace detail {

inline std::size_t vertex_bound(const LinkingGraph& g) {
  return g.vertices.empty() ? 0 : g.vertices.back() + 1;
}

}  // namespace detail

/// Connected components, each ascending, ordered by least vertex. The empty
/// graph has none.
inline std::vector<std::vector<std::size_t>> connected_components(
    const LinkingGraph& g) {
  const std::size_t n = detail::vertex_bound(g);
  const auto adj = g.adjacency(n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v : g.vertices) {
    if (seen[v]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (std::size_t y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Articulation points by DFS low-points, ascending.
inline std::vector<std::size_t> articulation_points(const LinkingGraph& g) {
  const std::size_t n = detail::vertex_bound(g);
  const auto adj = g.adjacency(n);
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unvisited), low(n, 0);
  std::vector<bool> cut(n, false);
  std::size_t timer = 0;

  struct Frame {
    std::size_t v;
    std::size_t parent;
    std::size_t next = 0;
    std::size_t children = 0;
  };
  for (std::size_t root : g.vertices) {
    if (disc[root] != unvisited) continue;
    std::vector<Frame> stack{{root, unvisited}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (disc[w] == unvisited) {
          ++f.children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) cut[done.v] = true;
      } else {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (stack.size() > 1 && low[done.v] >= disc[parent.v])
          cut[parent.v] = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

/// True iff the linking graph of the sublink on `subset` is connected (the
/// empty graph counts) and has no articulation point.
inline bool is_inseparable(const LinkingMatrix& m,
                           std::span<const std::size_t> subset) {
  if (subset.empty())
    throw std::invalid_argument("is_inseparable: empty subset");
  const LinkingGraph g = linking_graph(m.restrict_to(subset));
  return connected_components(g).size() <= 1 &&
         articulation_points(g).empty();
}

/// All subsets of size >= 2 with inseparable linking numbers, each
/// ascending, in lexicographic order.
inline std::vector<std::vector<std::size_t>> inseparable_sublinks(
    const LinkingMatrix& m,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  const std::size_t mu = m.mu();
  if (mu > limits.max_subset_mu || mu >= 63)
    throw CapExceeded("inseparable sublink enumeration limited to mu <= " +
                      std::to_string(limits.max_subset_mu));
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mu); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < mu; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(i);
    if (is_inseparable(m, subset)) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linkq
