#pragma once

// Translation-commutative quandles as families of subgroups of Z^m.
//
// A family S = {S_b} with e_b in S_b defines Q(S): the disjoint union of the
// coset spaces A_b = Z^m / S_b with x |> y = x + e_c (mod S_b) for y in A_c.
// Every tc quandle arises this way, and for a link the tc quotient of the
// link quandle is Q(S(L)) with S_i = <e_i, l_i>, l_i being row i of the
// linking matrix.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkq/error.hpp"
#include "linkq/lattice.hpp"
#include "linkq/limits.hpp"
#include "linkq/linking.hpp"
#include "linkq/quandle.hpp"

namespace linkq {

/// Base set B = {0..m-1}; subgroups[b] is S_b <= Z^m.
struct SubgroupFamily {
  std::size_t m = 0;
  std::vector<LatticeBasis> subgroups;

  /// HNF of each generator list; throws std::invalid_argument if some
  /// e_b is missing from S_b.
  static SubgroupFamily from_generators(
      std::size_t m, const std::vector<std::vector<IntVector>>& generators) {
    if (generators.size() != m)
      throw std::invalid_argument("family needs one generator list per base");
    SubgroupFamily f;
    f.m = m;
    for (const auto& gens : generators) f.subgroups.push_back(hnf(m, gens));
    f.validate();
    return f;
  }

  void validate() const {
    if (subgroups.size() != m)
      throw std::invalid_argument("family size mismatch");
    for (std::size_t b = 0; b < m; ++b) {
      if (subgroups[b].ambient_rank() != m)
        throw std::invalid_argument("subgroup ambient rank mismatch");
      if (!contains(subgroups[b], unit_vector(m, b)))
        throw std::invalid_argument("e_" + std::to_string(b + 1) +
                                    " is not in S_" + std::to_string(b + 1));
    }
  }

  bool operator==(const SubgroupFamily&) const = default;
};

/// The vectors s_b in Z_{B - b}: row b of a linking matrix, diagonal zero.
struct LinkFamilyRows {
  std::size_t m = 0;
  std::vector<std::vector<std::int64_t>> rows;

  static LinkFamilyRows from_matrix(const LinkingMatrix& mat) {
    LinkFamilyRows r{mat.mu(), mat.rows()};
    for (std::size_t i = 0; i < r.m; ++i) r.rows[i][i] = 0;
    return r;
  }

  std::int64_t operator()(std::size_t b, std::size_t k) const {
    return rows[b][k];
  }
};

struct LinkFamily {
  SubgroupFamily family;
  LinkFamilyRows rows;
};

/// A bijection between base sets (perm[b] = f(b)) and, for the +- criteria,
/// the multipliers: signs[f(b)] is the epsilon relating row b to row f(b).
struct IsoCertificate {
  std::vector<std::size_t> perm;
  std::vector<int> signs;  // empty for the general criterion

  bool operator==(const IsoCertificate&) const = default;
};

/// S_i = <e_i, s_i> where s_i is row i of `mat` with the diagonal zeroed.
inline LinkFamily family_from_linking(const LinkingMatrix& mat) {
  LinkFamily out;
  out.rows = LinkFamilyRows::from_matrix(mat);
  const std::size_t m = mat.mu();
  std::vector<std::vector<IntVector>> gens(m);
  for (std::size_t i = 0; i < m; ++i) {
    IntVector s(m);
    for (std::size_t j = 0; j < m; ++j) s[j] = out.rows(i, j);
    gens[i] = {unit_vector(m, i), std::move(s)};
  }
  out.family = SubgroupFamily::from_generators(m, gens);
  return out;
}

namespace detail {

/// Depth-first search over bijections f of {0..m-1}, assigning f(0),
/// f(1), ... with candidates in ascending order, so the first accepted
/// permutation is the lexicographically least. `extend(f, b)` vets the
/// freshly assigned f[b] (returning false prunes); `retract(b)` is called
/// after every extend(f, b) when the assignment is withdrawn.
template <class Extend, class Retract, class Accept>
std::optional<std::vector<std::size_t>> search_bijections(std::size_t m,
                                                          Extend&& extend,
                                                          Retract&& retract,
                                                          Accept&& accept) {
  std::vector<std::size_t> f(m);
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t b) -> bool {
    if (b == m) return accept(static_cast<const std::vector<std::size_t>&>(f));
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      f[b] = c;
      used[c] = true;
      const bool ok = extend(static_cast<const std::vector<std::size_t>&>(f), b);
      if (ok && rec(b + 1)) return true;
      retract(b);
      used[c] = false;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

inline void require_cap(std::size_t m, std::size_t cap, const char* what) {
  if (m > cap)
    throw CapExceeded(std::string(what) + " limited to mu <= " +
                      std::to_string(cap));
}

inline std::vector<std::int64_t> sorted_abs(std::span<const std::int64_t> v) {
  std::vector<std::int64_t> out;
  for (std::int64_t x : v) out.push_back(x < 0 ? -x : x);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace detail

/// Q(F) ~ Q(G) iff some bijection f carries every S_b onto S'_{f(b)}.
/// Returns the lexicographically least such f.
inline std::optional<IsoCertificate> qs_isomorphic_general(
    const SubgroupFamily& F, const SubgroupFamily& G,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  if (F.m != G.m) return std::nullopt;
  const std::size_t m = F.m;
  detail::require_cap(m, limits.max_mu, "subgroup-family isomorphism search");

  // invariants preserved by f: index of S_b, and the order of e_c mod S_b
  std::vector<std::optional<Integer>> idx_f(m), idx_g(m);
  std::vector<std::vector<Integer>> ord_f(m, std::vector<Integer>(m)),
      ord_g(m, std::vector<Integer>(m));
  for (std::size_t b = 0; b < m; ++b) {
    idx_f[b] = index(F.subgroups[b]);
    idx_g[b] = index(G.subgroups[b]);
    for (std::size_t c = 0; c < m; ++c) {
      ord_f[b][c] = axis_order(F.subgroups[b], c);
      ord_g[b][c] = axis_order(G.subgroups[b], c);
    }
  }
  {
    auto key = [](const std::optional<Integer>& x) {
      return x ? *x : Integer(-1);
    };
    std::vector<Integer> a, b;
    for (std::size_t i = 0; i < m; ++i) {
      a.push_back(key(idx_f[i]));
      b.push_back(key(idx_g[i]));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  auto extend = [&](const std::vector<std::size_t>& f, std::size_t b) {
    if (idx_f[b] != idx_g[f[b]]) return false;
    for (std::size_t a = 0; a <= b; ++a)
      if (ord_f[b][a] != ord_g[f[b]][f[a]] || ord_f[a][b] != ord_g[f[a]][f[b]])
        return false;
    return true;
  };
  auto accept = [&](const std::vector<std::size_t>& f) {
    for (std::size_t b = 0; b < m; ++b)
      if (permute_coordinates(F.subgroups[b], f) != G.subgroups[f[b]])
        return false;
    return true;
  };
  auto perm = detail::search_bijections(m, extend, [](std::size_t) {}, accept);
  if (!perm) return std::nullopt;
  return IsoCertificate{*perm, {}};
}

/// Q(S) ~ Q(S') for families generated by {e_b, s_b}: a bijection f and
/// signs with s_b[k] = eps * s'_{f(b)}[f(k)] for all b, k. This is exactly
/// isomorphism of tc quandles of links when the rows come from linking
/// matrices. Returns the lexicographically least f; signs forced by a
/// nonzero row, +1 otherwise.
inline std::optional<IsoCertificate> qs_isomorphic_pm(
    const LinkFamilyRows& R, const LinkFamilyRows& S,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  if (R.m != S.m) return std::nullopt;
  const std::size_t m = R.m;
  detail::require_cap(m, limits.max_mu, "linking-number isomorphism search");

  std::vector<std::vector<std::int64_t>> row_r(m), row_s(m), col_r(m),
      col_s(m);
  for (std::size_t b = 0; b < m; ++b) {
    row_r[b] = detail::sorted_abs(R.rows[b]);
    row_s[b] = detail::sorted_abs(S.rows[b]);
    std::vector<std::int64_t> cr, cs;
    for (std::size_t k = 0; k < m; ++k) {
      cr.push_back(R(k, b));
      cs.push_back(S(k, b));
    }
    col_r[b] = detail::sorted_abs(cr);
    col_s[b] = detail::sorted_abs(cs);
  }

  std::vector<int> eps(m, 0);  // by source row
  std::vector<std::size_t> set_at(m, m);
  auto extend = [&](const std::vector<std::size_t>& f, std::size_t b) {
    if (row_r[b] != row_s[f[b]] || col_r[b] != col_s[f[b]]) return false;
    auto check = [&](std::size_t r, std::size_t k) {
      const std::int64_t x = R(r, k), y = S(f[r], f[k]);
      if (detail::abs64(x) != detail::abs64(y)) return false;
      if (x == 0) return true;
      const int e = x == y ? 1 : -1;
      if (eps[r] == 0) {
        eps[r] = e;
        set_at[r] = b;
        return true;
      }
      return eps[r] == e;
    };
    for (std::size_t a = 0; a < b; ++a)
      if (!check(b, a) || !check(a, b)) return false;
    return true;
  };
  auto retract = [&](std::size_t b) {
    for (std::size_t r = 0; r < m; ++r)
      if (set_at[r] == b) {
        eps[r] = 0;
        set_at[r] = m;
      }
  };
  auto perm = detail::search_bijections(
      m, extend, retract, [](const std::vector<std::size_t>&) { return true; });
  if (!perm) return std::nullopt;
  IsoCertificate cert{*perm, std::vector<int>(m, 1)};
  for (std::size_t b = 0; b < m; ++b)
    cert.signs[(*perm)[b]] = eps[b] == 0 ? 1 : eps[b];
  return cert;
}

/// Classical form of the same decision: one sign per connected component of
/// the linking graph (components of the link outside the graph get a free
/// sign, reported as +1). Both matrices must be symmetric.
inline std::optional<IsoCertificate> tc_isomorphic_classical(
    const LinkingMatrix& M, const LinkingMatrix& N,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  if (!is_classical_consistent(M) || !is_classical_consistent(N))
    throw PreconditionError(
        "classical isomorphism test needs symmetric linking matrices");
  if (M.mu() != N.mu()) return std::nullopt;
  const std::size_t m = M.mu();
  detail::require_cap(m, limits.max_mu, "classical isomorphism search");

  // group id per link component; isolated components get their own
  std::vector<std::size_t> group(m);
  std::iota(group.begin(), group.end(), std::size_t{0});
  for (const auto& comp : connected_components(linking_graph(M)))
    for (std::size_t v : comp) group[v] = comp.front();

  std::vector<std::vector<std::int64_t>> row_m(m), row_n(m);
  for (std::size_t b = 0; b < m; ++b) {
    row_m[b] = detail::sorted_abs(M.row(b));
    row_n[b] = detail::sorted_abs(N.row(b));
  }

  std::vector<int> eps(m, 0);  // by group id
  std::vector<std::size_t> set_at(m, m);
  auto extend = [&](const std::vector<std::size_t>& f, std::size_t b) {
    if (row_m[b] != row_n[f[b]]) return false;
    for (std::size_t a = 0; a < b; ++a) {
      const std::int64_t x = M(b, a), y = N(f[b], f[a]);
      if (detail::abs64(x) != detail::abs64(y)) return false;
      if (x == 0) continue;
      const int e = x == y ? 1 : -1;
      const std::size_t g = group[b];
      if (eps[g] == 0) {
        eps[g] = e;
        set_at[g] = b;
      } else if (eps[g] != e) {
        return false;
      }
    }
    return true;
  };
  auto retract = [&](std::size_t b) {
    for (std::size_t g = 0; g < m; ++g)
      if (set_at[g] == b) {
        eps[g] = 0;
        set_at[g] = m;
      }
  };
  auto perm = detail::search_bijections(
      m, extend, retract, [](const std::vector<std::size_t>&) { return true; });
  if (!perm) return std::nullopt;
  IsoCertificate cert{*perm, std::vector<int>(m, 1)};
  for (std::size_t b = 0; b < m; ++b)
    cert.signs[(*perm)[b]] = eps[group[b]] == 0 ? 1 : eps[group[b]];
  return cert;
}

/// Least row-major matrix over all relabelings of components followed by
/// per-row sign changes. Two matrices share a canonical form iff their
/// links have isomorphic tc quandles.
inline LinkingMatrix canonical_form(
    const LinkingMatrix& M,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  const std::size_t m = M.mu();
  detail::require_cap(m, limits.max_canonical_mu, "canonical_form");
  std::vector<std::size_t> inv(m);  // inv[a] = source index placed at a
  std::iota(inv.begin(), inv.end(), std::size_t{0});
  std::vector<std::int64_t> best, cur(m * m);
  do {
    for (std::size_t a = 0; a < m; ++a) {
      int flip = 0;
      for (std::size_t c = 0; c < m; ++c) {
        const std::int64_t x = M(inv[a], inv[c]);
        if (flip == 0 && x != 0) flip = x > 0 ? -1 : 1;
        cur[a * m + c] = x;
      }
      if (flip == -1)
        for (std::size_t c = 0; c < m; ++c) cur[a * m + c] = -cur[a * m + c];
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(inv.begin(), inv.end()));
  LinkingMatrix out(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) out(a, c) = best[a * m + c];
  return out;
}

// ---------------------------------------------------------------------------
// Finite Q(S)

struct MaterializedQuandle {
  FiniteQuandle quandle;
  std::vector<std::size_t> orbit;  // orbit (= base index) of each element
  std::vector<IntVector> coset;    // reduced coset representative
};

/// Operation table of Q(F). Elements are numbered orbit by orbit; inside
/// orbit b, by the reduced representative in mixed radix (first coordinate
/// most significant). Element 0 of each orbit is the zero coset.
inline MaterializedQuandle materialize(
    const SubgroupFamily& F,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  const std::size_t m = F.m;
  std::vector<std::vector<std::size_t>> radix(m);
  std::vector<std::size_t> offset(m + 1, 0);
  for (std::size_t b = 0; b < m; ++b) {
    const auto idx = index(F.subgroups[b]);
    if (!idx)
      throw PreconditionError("orbit " + std::to_string(b + 1) +
                              " is infinite");
    if (*idx > limits.max_quandle_size ||
        offset[b] + static_cast<std::size_t>(*idx) > limits.max_quandle_size)
      throw CapExceeded("materialized quandle would exceed " +
                        std::to_string(limits.max_quandle_size) +
                        " elements");
    offset[b + 1] = offset[b] + static_cast<std::size_t>(*idx);
    for (std::size_t k = 0; k < m; ++k)
      radix[b].push_back(
          static_cast<std::size_t>(F.subgroups[b].rows()[k][k]));
  }
  const std::size_t n = offset[m];

  MaterializedQuandle out;
  out.orbit.resize(n);
  out.coset.resize(n);
  auto encode = [&](std::size_t b, const IntVector& r) {
    std::size_t local = 0;
    for (std::size_t k = 0; k < m; ++k)
      local = local * radix[b][k] + static_cast<std::size_t>(r[k]);
    return offset[b] + local;
  };
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t local = 0; local < offset[b + 1] - offset[b]; ++local) {
      IntVector r(m);
      std::size_t rest = local;
      for (std::size_t k = m; k-- > 0;) {
        r[k] = rest % radix[b][k];
        rest /= radix[b][k];
      }
      out.orbit[offset[b] + local] = b;
      out.coset[offset[b] + local] = std::move(r);
    }

  // step[x][c] = x + e_c in the orbit of x
  std::vector<std::vector<Element>> step(n, std::vector<Element>(m));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < m; ++c) {
      IntVector v = out.coset[x];
      v[c] += 1;
      step[x][c] = static_cast<Element>(
          encode(out.orbit[x], reduce(F.subgroups[out.orbit[x]], v)));
    }
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = step[x][out.orbit[y]];
  out.quandle = FiniteQuandle(n, std::move(table));
  return out;
}

/// Applies prod_c beta_{reps[c]}^{y[c]} to x (the order is irrelevant in a
/// tc quandle).
inline Element apply_translations(const FiniteQuandle& q,
                                  std::span<const Element> reps,
                                  std::span<const std::int64_t> y, Element x) {
  for (std::size_t c = 0; c < reps.size(); ++c)
    if (y[c] != 0) x = translate_power(q, reps[c], y[c], x);
  return x;
}

/// Recovers a family S with Q ~ Q(S) from a finite tc quandle. Orbits are
/// ordered by least element, which also serves as the base point q_b;
/// S_b is generated by the closure relations v(x) + e_c - v(beta_c(x)) met
/// while exploring A_b breadth-first from q_b.
inline SubgroupFamily extract_structure(const FiniteQuandle& q) {
  if (auto bad = check_axioms(q))
    throw PreconditionError("not a quandle: " + bad->describe());
  if (!is_tc(q))
    throw PreconditionError("quandle is not translation-commutative");

  const auto orbits = q.orbits();
  const std::size_t m = orbits.size();
  std::vector<Element> base(m);
  for (std::size_t b = 0; b < m; ++b) base[b] = orbits[b].front();

  SubgroupFamily F;
  F.m = m;
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<std::optional<IntVector>> coord(q.size());
    std::vector<IntVector> relations;
    std::deque<Element> queue{base[b]};
    coord[base[b]] = IntVector(m, 0);
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (std::size_t c = 0; c < m; ++c) {
        const Element y = q(x, base[c]);
        IntVector stepped = *coord[x];
        stepped[c] += 1;
        if (!coord[y]) {
          coord[y] = std::move(stepped);
          queue.push_back(y);
          continue;
        }
        for (std::size_t k = 0; k < m; ++k) stepped[k] -= (*coord[y])[k];
        if (!detail::is_zero(stepped)) relations.push_back(std::move(stepped));
      }
    }
    F.subgroups.push_back(hnf(m, relations));
  }
  F.validate();
  return F;
}

}  // namespace linkq
