#pragma once

// Counting quandle maps from a link quandle into a finite target, i.e. arc
// colorings satisfying the crossing relation at every classical crossing:
//
//   w = +1:  under_out = under_in |> over
//   w = -1:  under_in  = under_out |> over

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkq/diagram.hpp"
#include "linkq/error.hpp"
#include "linkq/limits.hpp"
#include "linkq/linking.hpp"
#include "linkq/quandle.hpp"
#include "linkq/tcquandle.hpp"

namespace linkq {

namespace detail {

inline void require_tc(const FiniteQuandle& t) {
  if (auto bad = check_axioms(t))
    throw PreconditionError("target is not a quandle: " + bad->describe());
  if (!is_tc(t))
    throw PreconditionError("target quandle is not translation-commutative");
}

inline void require_candidates(std::uint64_t size, std::uint64_t slots,
                               const SearchLimits& limits, const char* what) {
  if (saturating_power(size, slots) > limits.max_colorings)
    throw CapExceeded(std::string(what) + ": " + std::to_string(size) + "^" +
                      std::to_string(slots) + " candidates exceed " +
                      std::to_string(limits.max_colorings));
}

/// Calls visit(t) for every t in {0..size-1}^len, odometer order.
template <class Visit>
void for_each_tuple(std::size_t size, std::size_t len, Visit&& visit) {
  if (size == 0 && len > 0) return;
  std::vector<Element> t(len, 0);
  for (;;) {
    visit(static_cast<const std::vector<Element>&>(t));
    std::size_t k = len;
    while (k > 0 && ++t[k - 1] == size) t[--k] = 0;
    if (k == 0) return;
  }
}

}  // namespace detail

/// Number of candidate colorings the brute-force counter would examine.
inline std::uint64_t bruteforce_candidates(const LinkDiagram& d,
                                           const FiniteQuandle& target) {
  return detail::saturating_power(target.size(), arc_table(d).arc_count());
}

/// Direct count over all arc colorings, with each crossing tested as soon
/// as its three arcs are colored. Works for any quandle target.
inline std::uint64_t count_homs_bruteforce(
    const LinkDiagram& d, const FiniteQuandle& target,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  if (auto bad = check_axioms(target))
    throw PreconditionError("target is not a quandle: " + bad->describe());
  const ArcTable arcs = arc_table(d);
  const std::size_t n = arcs.arc_count();
  detail::require_candidates(target.size(), n, limits,
                             "brute-force coloring count");

  // crossings become checkable once their highest arc is colored
  std::vector<std::vector<const ArcCrossing*>> ready(n);
  for (const ArcCrossing& c : arcs.crossings) {
    const std::size_t last =
        std::max({c.over_arc, c.under_in_arc, c.under_out_arc});
    ready[last].push_back(&c);
  }
  std::vector<Element> color(n);
  auto holds = [&](const ArcCrossing& c) {
    const Element over = color[c.over_arc];
    return c.writhe > 0
               ? color[c.under_out_arc] == target(color[c.under_in_arc], over)
               : color[c.under_in_arc] == target(color[c.under_out_arc], over);
  };

  std::uint64_t count = 0;
  const auto size = static_cast<Element>(target.size());
  // iterative depth-first enumeration
  std::size_t depth = 0;
  std::vector<Element> next(n + 1, 0);
  while (true) {
    if (depth == n) {
      ++count;
      if (n == 0) break;
      --depth;
      continue;
    }
    if (next[depth] == size) {
      next[depth] = 0;
      if (depth == 0) break;
      --depth;
      continue;
    }
    color[depth] = next[depth]++;
    bool ok = true;
    for (const ArcCrossing* c : ready[depth])
      if (!holds(*c)) {
        ok = false;
        break;
      }
    if (ok) ++depth;
  }
  return count;
}

/// Count for translation-commutative targets: choose a color for the base
/// arc a_{i0} of every component, propagate along each component through
/// its under-crossings using the translation by the over component's base
/// color, and keep the choices that close up.
inline std::uint64_t count_homs_tc_propagate(
    const LinkDiagram& d, const FiniteQuandle& target,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  detail::require_tc(target);
  const ArcTable arcs = arc_table(d);
  const std::size_t mu = arcs.component_count();
  detail::require_candidates(target.size(), mu, limits,
                             "propagation coloring count");

  std::uint64_t count = 0;
  detail::for_each_tuple(
      target.size(), mu, [&](const std::vector<Element>& seed) {
        for (std::size_t i = 0; i < mu; ++i) {
          Element x = seed[i];
          for (const ArcCrossing& c : arcs.crossings_under(i))
            x = translate_power(target, seed[c.over_component], c.writhe, x);
          if (x != seed[i]) return;
        }
        ++count;
      });
  return count;
}

/// Count from the linking matrix alone: tuples t in T^mu such that
/// prod_{j != i} beta_{t_j}^{M(i,j)} fixes t_i for every i.
inline std::uint64_t count_homs_tc_fixedpoint(
    const LinkingMatrix& M, const FiniteQuandle& target,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  detail::require_tc(target);
  const std::size_t mu = M.mu();
  detail::require_candidates(target.size(), mu, limits,
                             "fixed-point coloring count");

  std::vector<std::int64_t> exponents(mu);
  std::uint64_t count = 0;
  detail::for_each_tuple(
      target.size(), mu, [&](const std::vector<Element>& t) {
        for (std::size_t i = 0; i < mu; ++i) {
          for (std::size_t j = 0; j < mu; ++j)
            exponents[j] = j == i ? 0 : M(i, j);
          if (apply_translations(target, t, exponents, t[i]) != t[i]) return;
        }
        ++count;
      });
  return count;
}

/// Closed form for two-component links into X_n (n >= 2).
inline std::uint64_t hn_predicted(std::int64_t l12, std::int64_t l21,
                                  std::int64_t n) {
  if (n < 2) throw std::invalid_argument("hn_predicted: n must be >= 2");
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t k = un * un + 1;
  if (l12 % n == 0) k += un;
  if (l21 % n == 0) k += un;
  return k;
}

}  // namespace linkq
