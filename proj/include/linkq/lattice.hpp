#pragma once

// Subgroups of Z^m in row-style Hermite normal form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linkq {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

inline IntVector unit_vector(std::size_t m, std::size_t k) {
  IntVector v(m, 0);
  v.at(k) = 1;
  return v;
}

namespace detail {

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// floor(a / b) for b > 0
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  if (a == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

}  // namespace detail

/// Canonical basis of a subgroup of Z^m: rows in echelon form with positive
/// pivots, and every entry above a pivot reduced into [0, pivot). Two
/// subgroups are equal iff their bases compare equal.
class LatticeBasis {
 public:
  LatticeBasis() = default;

  /// The zero subgroup of Z^m.
  explicit LatticeBasis(std::size_t ambient_rank) : m_(ambient_rank) {}

  std::size_t ambient_rank() const { return m_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntVector>& rows() const { return rows_; }

  std::size_t pivot_column(std::size_t r) const {
    const IntVector& row = rows_.at(r);
    for (std::size_t k = 0; k < m_; ++k)
      if (row[k] != 0) return k;
    return m_;
  }

  bool is_full_rank() const { return rows_.size() == m_; }

  bool operator==(const LatticeBasis&) const = default;

 private:
  friend LatticeBasis hnf(std::size_t, const std::vector<IntVector>&);

  std::size_t m_ = 0;
  std::vector<IntVector> rows_;
};

/// Hermite normal form of the subgroup generated by `generators`.
inline LatticeBasis hnf(std::size_t ambient_rank,
                        const std::vector<IntVector>& generators) {
  std::vector<IntVector> a;
  for (const IntVector& g : generators) {
    if (g.size() != ambient_rank)
      throw std::invalid_argument("hnf: generator length mismatch");
    if (!detail::is_zero(g)) a.push_back(g);
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient_rank && r < a.size(); ++col) {
    // Euclid on column `col` over rows r.. until one nonzero remains
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][col] != 0 &&
            (best == a.size() || abs(a[i][col]) < abs(a[best][col])))
          best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        const Integer q = a[i][col] / a[r][col];
        detail::axpy(a[i], -q, a[r]);
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (Integer& x : a[r]) x = -x;
    const Integer pivot = a[r][col];
    for (std::size_t i = 0; i < r; ++i)
      detail::axpy(a[i], -detail::floor_div(a[i][col], pivot), a[r]);
    ++r;
  }

  LatticeBasis out(ambient_rank);
  for (std::size_t i = 0; i < r; ++i) out.rows_.push_back(std::move(a[i]));
  return out;
}

/// Membership by back-substitution against the echelon rows.
inline bool contains(const LatticeBasis& basis, std::span<const Integer> v) {
  if (v.size() != basis.ambient_rank())
    throw std::invalid_argument("contains: vector length mismatch");
  IntVector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < basis.rank(); ++r) {
    const std::size_t col = basis.pivot_column(r);
    for (std::size_t k = 0; k < col; ++k)
      if (rest[k] != 0) return false;
    const Integer& pivot = basis.rows()[r][col];
    if (rest[col] % pivot != 0) return false;
    detail::axpy(rest, -(rest[col] / pivot), basis.rows()[r]);
  }
  return detail::is_zero(rest);
}

inline bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  return a == b;
}

/// [Z^m : L], or nullopt when the index is infinite.
inline std::optional<Integer> index(const LatticeBasis& basis) {
  if (!basis.is_full_rank()) return std::nullopt;
  Integer product = 1;
  for (std::size_t r = 0; r < basis.rank(); ++r)
    product *= basis.rows()[r][r];
  return product;
}

/// Image of the subgroup under the coordinate map e_k -> e_{f[k]}.
inline LatticeBasis permute_coordinates(const LatticeBasis& basis,
                                        std::span<const std::size_t> f) {
  const std::size_t m = basis.ambient_rank();
  if (f.size() != m)
    throw std::invalid_argument("permute_coordinates: size mismatch");
  std::vector<bool> hit(m, false);
  for (std::size_t k : f) {
    if (k >= m || hit[k])
      throw std::invalid_argument("permute_coordinates: not a permutation");
    hit[k] = true;
  }
  std::vector<IntVector> moved;
  for (const IntVector& row : basis.rows()) {
    IntVector w(m, 0);
    for (std::size_t k = 0; k < m; ++k) w[f[k]] = row[k];
    moved.push_back(std::move(w));
  }
  return hnf(m, moved);
}

/// Canonical coset representative of v modulo a full-rank basis: the unique
/// w = v (mod L) with 0 <= w[k] < pivot_k.
inline IntVector reduce(const LatticeBasis& basis, IntVector v) {
  if (!basis.is_full_rank())
    throw std::invalid_argument("reduce: basis must have full rank");
  if (v.size() != basis.ambient_rank())
    throw std::invalid_argument("reduce: vector length mismatch");
  for (std::size_t k = 0; k < basis.rank(); ++k) {
    const IntVector& row = basis.rows()[k];
    detail::axpy(v, -detail::floor_div(v[k], row[k]), row);
  }
  return v;
}

/// Smallest k > 0 with k * e_c in L, or 0 when no such k exists.
inline Integer axis_order(const LatticeBasis& basis, std::size_t c) {
  const std::size_t m = basis.ambient_rank();
  // move coordinate c last; lattice vectors on that axis are then exactly
  // the multiples of a row whose pivot sits in the last column
  std::vector<std::size_t> f(m);
  for (std::size_t k = 0; k < m; ++k)
    f[k] = k < c ? k : (k == c ? m - 1 : k - 1);
  const LatticeBasis moved = permute_coordinates(basis, f);
  if (moved.rank() == 0) return 0;
  const std::size_t last = moved.rank() - 1;
  return moved.pivot_column(last) == m - 1 ? moved.rows()[last][m - 1]
                                           : Integer(0);
}

}  // namespace linkq
