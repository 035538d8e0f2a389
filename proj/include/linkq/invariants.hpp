#pragma once

// Side-by-side comparison of the invariants of two diagrams that are
// supposed to present the same link, e.g. a diagram and a fuzzed copy.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkq/coloring.hpp"
#include "linkq/diagram.hpp"
#include "linkq/groups.hpp"
#include "linkq/limits.hpp"
#include "linkq/linking.hpp"
#include "linkq/quandle.hpp"
#include "linkq/tcquandle.hpp"

namespace linkq {

struct InvariantCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Brute-force counts are compared only while both diagrams stay within
/// `brute_budget` candidate colorings; they are reported as skipped
/// otherwise. Targets must be tc quandles.
inline InvariantReport compare_invariants(
    const LinkDiagram& a, const LinkDiagram& b,
    std::span<const FiniteQuandle> targets, std::uint64_t brute_budget,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  InvariantReport r;
  auto add = [&](std::string name, bool passed, bool skipped = false) {
    r.checks.push_back({std::move(name), passed, skipped});
  };

  const LinkingMatrix ma = linking_matrix(a), mb = linking_matrix(b);
  add("linking_matrix", ma == mb);
  if (ma.mu() <= limits.max_mu)
    add("tc_isomorphic",
        qs_isomorphic_pm(LinkFamilyRows::from_matrix(ma),
                         LinkFamilyRows::from_matrix(mb), limits)
            .has_value());
  else
    add("tc_isomorphic", true, true);
  if (ma.mu() <= limits.max_canonical_mu)
    add("canonical_form",
        canonical_form(ma, limits) == canonical_form(mb, limits));
  else
    add("canonical_form", true, true);

  for (std::size_t t = 0; t < targets.size(); ++t) {
    const FiniteQuandle& T = targets[t];
    const std::string tag = "target " + std::to_string(t + 1);
    add("propagate " + tag,
        count_homs_tc_propagate(a, T, limits) ==
            count_homs_tc_propagate(b, T, limits));
    if (bruteforce_candidates(a, T) <= brute_budget &&
        bruteforce_candidates(b, T) <= brute_budget)
      add("bruteforce " + tag, count_homs_bruteforce(a, T, limits) ==
                                   count_homs_bruteforce(b, T, limits));
    else
      add("bruteforce " + tag, true, true);
  }
  add("nilpotent3", render(nilpotent3(ma)) == render(nilpotent3(mb)));
  return r;
}

}  // namespace linkq
