#pragma once

// Seeded random inputs for the property tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "linkq/linkq.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::vector<std::size_t> permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// A family with every S_b of finite index <= max_index, built from e_b
/// plus random short vectors (rejection sampled).
inline linkq::SubgroupFamily finite_family(Rng& rng, std::size_t m,
                                           std::int64_t max_index) {
  std::vector<linkq::LatticeBasis> subgroups;
  for (std::size_t b = 0; b < m; ++b) {
    for (;;) {
      std::vector<linkq::IntVector> gens{linkq::unit_vector(m, b)};
      const auto extra = static_cast<std::size_t>(uniform(rng, 1, 3));
      for (std::size_t g = 0; g < extra; ++g) {
        linkq::IntVector v(m);
        for (auto& x : v) x = uniform(rng, -max_index, max_index);
        gens.push_back(std::move(v));
      }
      auto basis = linkq::hnf(m, gens);
      const auto idx = linkq::index(basis);
      if (idx && *idx <= max_index) {
        subgroups.push_back(std::move(basis));
        break;
      }
    }
  }
  linkq::SubgroupFamily f{m, std::move(subgroups)};
  f.validate();
  return f;
}

/// Random linking matrix with zero diagonal and entries in [-r, r].
inline linkq::LinkingMatrix matrix(Rng& rng, std::size_t mu, std::int64_t r,
                                   bool symmetric) {
  linkq::LinkingMatrix m(mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      if (i == j || (symmetric && j < i)) continue;
      m(i, j) = uniform(rng, -r, r);
      if (symmetric) m(j, i) = m(i, j);
    }
  return m;
}

/// N(p[i], p[j]) = eps[i] M(i, j).
inline linkq::LinkingMatrix relabel(const linkq::LinkingMatrix& m,
                                    const std::vector<std::size_t>& p,
                                    const std::vector<int>& eps) {
  linkq::LinkingMatrix out(m.mu());
  for (std::size_t i = 0; i < m.mu(); ++i)
    for (std::size_t j = 0; j < m.mu(); ++j)
      out(p[i], p[j]) = eps[i] * m(i, j);
  return out;
}

/// Relabeling with one random sign per connected component of the linking
/// graph, which keeps symmetric matrices symmetric.
inline linkq::LinkingMatrix classical_relabel(Rng& rng,
                                              const linkq::LinkingMatrix& m) {
  std::vector<int> eps(m.mu(), 1);
  for (const auto& comp : linkq::connected_components(linkq::linking_graph(m))) {
    const int s = uniform(rng, 0, 1) ? 1 : -1;
    for (std::size_t v : comp) eps[v] = s;
  }
  return relabel(m, permutation(rng, m.mu()), eps);
}

/// A tc quandle with `size` elements, materialized from a random family
/// and shuffled.
inline linkq::FiniteQuandle tc_table(Rng& rng, std::size_t size) {
  for (;;) {
    const auto m = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = finite_family(rng, m, static_cast<std::int64_t>(size));
    const auto mq = linkq::materialize(f);
    if (mq.quandle.size() != size) continue;
    const auto p = permutation(rng, size);
    return linkq::relabel(mq.quandle,
                          std::vector<linkq::Element>(p.begin(), p.end()));
  }
}

}  // namespace gen
