#pragma once

// Finite quandles as operation tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linkq/error.hpp"

namespace linkq {

using Element = std::uint32_t;

/// A binary operation on {0..size-1}; (*this)(x, y) is x |> y.
///
/// The table is not required to satisfy the quandle axioms on
/// construction, see check_axioms().
class FiniteQuandle {
 public:
  FiniteQuandle() = default;

  FiniteQuandle(std::size_t size, std::vector<Element> table)
      : size_(size), table_(std::move(table)) {
    if (table_.size() != size_ * size_)
      throw std::invalid_argument("quandle table must be size x size");
    for (Element e : table_)
      if (e >= size_)
        throw std::invalid_argument("quandle table entry out of range");
  }

  std::size_t size() const { return size_; }

  Element operator()(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * size_ + y];
  }

  const std::vector<Element>& table() const { return table_; }

  /// beta_y as a permutation: x -> x |> y.
  std::vector<Element> translation(Element y) const {
    std::vector<Element> perm(size_);
    for (Element x = 0; x < size_; ++x) perm[x] = (*this)(x, y);
    return perm;
  }

  /// Orbit label of every element. Orbits are the classes of the relation
  /// generated by x ~ x |> y, numbered by least element.
  std::vector<std::size_t> orbit_labels() const {
    std::vector<std::size_t> parent(size_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (Element x = 0; x < size_; ++x)
      for (Element y = 0; y < size_; ++y) {
        const std::size_t a = find(x), b = find((*this)(x, y));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::size_t> label(size_);
    std::vector<std::size_t> root_label(size_, size_);
    std::size_t next = 0;
    for (std::size_t x = 0; x < size_; ++x) {
      const std::size_t r = find(x);
      if (root_label[r] == size_) root_label[r] = next++;
      label[x] = root_label[r];
    }
    return label;
  }

  /// Orbits as ascending element lists, ordered by least element.
  std::vector<std::vector<Element>> orbits() const {
    const auto label = orbit_labels();
    std::vector<std::vector<Element>> out;
    for (Element x = 0; x < size_; ++x) {
      if (label[x] >= out.size()) out.resize(label[x] + 1);
      out[label[x]].push_back(x);
    }
    return out;
  }

  bool operator==(const FiniteQuandle&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<Element> table_;
};

// ---------------------------------------------------------------------------
// Axioms

struct AxiomViolation {
  enum class Axiom { Idempotence, RightBijectivity, SelfDistributivity };
  Axiom axiom;
  std::vector<Element> witness;

  std::string describe() const {
    std::ostringstream os;
    switch (axiom) {
      case Axiom::Idempotence:
        os << "idempotence fails: " << witness[0] << " |> " << witness[0]
           << " != " << witness[0];
        break;
      case Axiom::RightBijectivity:
        os << "translation by " << witness[0]
           << " is not a bijection (value " << witness[1]
           << " hit twice)";
        break;
      case Axiom::SelfDistributivity:
        os << "self-distributivity fails at (w, x, y) = (" << witness[0]
           << ", " << witness[1] << ", " << witness[2] << ")";
        break;
    }
    return os.str();
  }
};

/// First violated axiom, checked in the order idempotence, bijective
/// translations, self-distributivity; nullopt for a quandle.
inline std::optional<AxiomViolation> check_axioms(const FiniteQuandle& q) {
  using A = AxiomViolation::Axiom;
  const auto n = static_cast<Element>(q.size());
  for (Element x = 0; x < n; ++x)
    if (q(x, x) != x) return AxiomViolation{A::Idempotence, {x}};
  for (Element y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (Element x = 0; x < n; ++x) {
      const Element v = q(x, y);
      if (hit[v]) return AxiomViolation{A::RightBijectivity, {y, v}};
      hit[v] = true;
    }
  }
  for (Element w = 0; w < n; ++w)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (q(q(w, x), y) != q(q(w, y), q(x, y)))
          return AxiomViolation{A::SelfDistributivity, {w, x, y}};
  return std::nullopt;
}

/// (x |> y) |> z == (x |> z) |> y on every triple.
inline bool satisfies_tc_identity(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (q(q(x, y), z) != q(q(x, z), y)) return false;
  return true;
}

/// The translation group is abelian iff its generators commute pairwise.
inline bool has_commuting_translations(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  std::vector<std::vector<Element>> beta;
  for (Element y = 0; y < n; ++y) beta.push_back(q.translation(y));
  for (Element y = 0; y < n; ++y)
    for (Element z = y + 1; z < n; ++z)
      for (Element x = 0; x < n; ++x)
        if (beta[z][beta[y][x]] != beta[y][beta[z][x]]) return false;
  return true;
}

/// Translation-commutativity, decided by both the triple identity and the
/// generator-commutation test. The two must agree.
inline bool is_tc(const FiniteQuandle& q) {
  const bool by_identity = satisfies_tc_identity(q);
  if (by_identity != has_commuting_translations(q))
    throw std::logic_error("is_tc: identity and group checks disagree");
  return by_identity;
}

/// beta_y^k (x), k of either sign.
inline Element translate_power(const FiniteQuandle& q, Element y,
                               std::int64_t k, Element x) {
  if (k >= 0 && static_cast<std::uint64_t>(k) <= q.size()) {
    for (std::int64_t i = 0; i < k; ++i) x = q(x, y);
    return x;
  }
  // reduce k modulo the length of the cycle of x under beta_y
  std::vector<Element> cycle{x};
  for (Element z = q(x, y); z != x; z = q(z, y)) cycle.push_back(z);
  const auto len = static_cast<std::int64_t>(cycle.size());
  const std::int64_t idx = ((k % len) + len) % len;
  return cycle[static_cast<std::size_t>(idx)];
}

// ---------------------------------------------------------------------------
// Constructions

inline FiniteQuandle trivial_quandle(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>(x);
  return FiniteQuandle(n, std::move(t));
}

/// Dihedral quandle R_n: x |> y = 2y - x mod n.
inline FiniteQuandle dihedral_quandle(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>((2 * y + n - x % n) % n);
  return FiniteQuandle(n, std::move(t));
}

/// X_n: element 0 is a singleton orbit whose translation cycles the
/// n-element orbit {1..n}; translations by 1..n are the identity.
///
/// As a subgroup family this is S_1 = Z^2, S_2 = <e_2, n e_1>; the counts
/// of maps from a two-component link quandle into X_n are then
/// n^2 + 1 + n [n | l_{1/2}] + n [n | l_{2/1}].
inline FiniteQuandle xn(std::size_t n) {
  if (n < 1) throw std::invalid_argument("xn: n must be >= 1");
  const std::size_t size = n + 1;
  std::vector<Element> t(size * size);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      std::size_t v = x;
      if (x >= 1 && y == 0) v = 1 + x % n;
      t[x * size + y] = static_cast<Element>(v);
    }
  return FiniteQuandle(size, std::move(t));
}

/// Relabels elements: element x of `q` becomes perm[x].
inline FiniteQuandle relabel(const FiniteQuandle& q,
                             const std::vector<Element>& perm) {
  const std::size_t n = q.size();
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      t[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[q(x, y)];
  return FiniteQuandle(n, std::move(t));
}

// ---------------------------------------------------------------------------
// Table files: first line m, then m rows of m integers in 0..m-1.

inline FiniteQuandle read_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long m = -1;
  if (!(in >> m) || m < 1)
    throw ParseError("quandle table: expected a positive size on line 1");
  if (m > 65535) throw ParseError("quandle table: size too large");
  const auto n = static_cast<std::size_t>(m);
  std::vector<Element> t;
  t.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v = -1;
    if (!(in >> v))
      throw ParseError("quandle table: expected " + std::to_string(n * n) +
                       " entries, found " + std::to_string(i));
    if (v < 0 || v >= m)
      throw ParseError("quandle table: entry " + std::to_string(v) +
                       " out of range at row " + std::to_string(i / n + 1));
    t.push_back(static_cast<Element>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("quandle table: trailing data");
  return FiniteQuandle(n, std::move(t));
}

inline std::string write_table(const FiniteQuandle& q) {
  std::string out = std::to_string(q.size()) + "\n";
  for (Element x = 0; x < q.size(); ++x) {
    for (Element y = 0; y < q.size(); ++y) {
      if (y > 0) out += ' ';
      out += std::to_string(q(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace linkq
