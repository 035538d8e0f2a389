#pragma once

// Group presentations attached to a link: the Wirtinger presentation of the
// link group and the class-2 nilpotent quotient G/G_3, which depends only on
// the linking matrix.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "linkq/diagram.hpp"
#include "linkq/error.hpp"
#include "linkq/limits.hpp"
#include "linkq/linking.hpp"
#include "linkq/tcquandle.hpp"

namespace linkq {

struct Letter {
  std::size_t generator = 0;
  std::int64_t exponent = 1;

  bool operator==(const Letter&) const = default;
};

/// A freely reduced word: adjacent letters never share a generator and no
/// exponent is zero.
class Word {
 public:
  Word() = default;

  Word& append(std::size_t generator, std::int64_t exponent) {
    if (exponent == 0) return *this;
    if (!letters_.empty() && letters_.back().generator == generator) {
      letters_.back().exponent += exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back({generator, exponent});
    }
    return *this;
  }

  Word& append(const Word& w) {
    for (const Letter& l : w.letters_) append(l.generator, l.exponent);
    return *this;
  }

  Word inverse() const {
    Word out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      out.append(it->generator, -it->exponent);
    return out;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  std::int64_t exponent_sum(std::size_t generator) const {
    std::int64_t s = 0;
    for (const Letter& l : letters_)
      if (l.generator == generator) s += l.exponent;
    return s;
  }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

inline Word letter(std::size_t generator, std::int64_t exponent = 1) {
  return Word().append(generator, exponent);
}

/// [a, b] = a b a^-1 b^-1
inline Word commutator(const Word& a, const Word& b) {
  Word w = a;
  w.append(b).append(a.inverse()).append(b.inverse());
  return w;
}

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  bool operator==(const GroupPresentation&) const = default;
};

/// `<g1,...,gN | w1, w2, ...>`; letters are `name` or `name^e`, the empty
/// word is `1`.
inline std::string render(const GroupPresentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i > 0) out += ',';
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r > 0) out += ", ";
    const auto& letters = p.relators[r].letters();
    if (letters.empty()) out += '1';
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k > 0) out += ' ';
      out += p.generators.at(letters[k].generator);
      if (letters[k].exponent != 1)
        out += '^' + std::to_string(letters[k].exponent);
    }
  }
  out += '>';
  return out;
}

/// One generator g<i>_<m> per arc a_{im} (component i 1-based), one relator
/// per classical crossing: g_out g_over^w g_in^-1 g_over^-w, i.e.
/// g_out = g_over^w g_in g_over^-w.
inline GroupPresentation wirtinger(const LinkDiagram& d) {
  const ArcTable arcs = arc_table(d);
  GroupPresentation p;
  for (std::size_t i = 0; i < arcs.component_count(); ++i)
    for (std::size_t m = 0; m < arcs.arc_counts[i]; ++m)
      p.generators.push_back("g" + std::to_string(i + 1) + "_" +
                             std::to_string(m));
  for (const ArcCrossing& c : arcs.crossings) {
    Word w;
    w.append(c.under_out_arc, 1)
        .append(c.over_arc, c.writhe)
        .append(c.under_in_arc, -1)
        .append(c.over_arc, -c.writhe);
    p.relators.push_back(std::move(w));
  }
  return p;
}

/// Presentation of G/G_3 on generators g1..g_mu:
///   lambda_i g_i lambda_i^-1 g_i^-1 with lambda_i = prod_{j != i} g_j^{M(i,j)}
///   (j ascending; omitted when lambda_i is empty), then
///   [g_i, [g_j, g_k]] for every i and every ordered pair j != k.
inline GroupPresentation nilpotent3(const LinkingMatrix& M) {
  const std::size_t mu = M.mu();
  GroupPresentation p;
  for (std::size_t i = 0; i < mu; ++i)
    p.generators.push_back("g" + std::to_string(i + 1));
  for (std::size_t i = 0; i < mu; ++i) {
    Word lambda;
    for (std::size_t j = 0; j < mu; ++j)
      if (j != i) lambda.append(j, M(i, j));
    if (lambda.empty()) continue;
    p.relators.push_back(commutator(lambda, letter(i)));
  }
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t k = 0; k < mu; ++k)
        if (j != k)
          p.relators.push_back(
              commutator(letter(i), commutator(letter(j), letter(k))));
  return p;
}

// ---------------------------------------------------------------------------
// Linking-number condition for meridian-preserving isomorphism of G/G_3

struct SublinkSign {
  std::vector<std::size_t> components;  // ascending, source indexing
  int sign = 1;

  bool operator==(const SublinkSign&) const = default;
};

struct SaktraCertificate {
  std::vector<std::size_t> perm;  // perm[i] = index of the matching component
  std::vector<SublinkSign> sublinks;

  bool operator==(const SaktraCertificate&) const = default;
};

enum class SaktraMode { Fixed, Search };

/// For classical links: does every inseparable sublink S of M admit a sign
/// eps_S with M(j,k) = eps_S * N(f j, f k) on S? Fixed mode uses f = id;
/// search mode returns the lexicographically least f that works.
inline std::optional<SaktraCertificate> saktra_condition(
    const LinkingMatrix& M, const LinkingMatrix& N, SaktraMode mode,
    const SearchLimits& limits = SearchLimits::from_environment()) {
  if (!is_classical_consistent(M) || !is_classical_consistent(N))
    throw PreconditionError(
        "linking-number condition needs symmetric linking matrices");
  if (M.mu() != N.mu()) return std::nullopt;
  const std::size_t mu = M.mu();
  const auto subsets = inseparable_sublinks(M, limits);

  auto sign_for = [&](const std::vector<std::size_t>& S,
                      const std::vector<std::size_t>& f) -> std::optional<int> {
    for (int e : {1, -1}) {
      bool ok = true;
      for (std::size_t j : S)
        for (std::size_t k : S)
          if (M(j, k) != e * N(f[j], f[k])) ok = false;
      if (ok) return e;
    }
    return std::nullopt;
  };
  auto certify = [&](const std::vector<std::size_t>& f)
      -> std::optional<SaktraCertificate> {
    SaktraCertificate cert{f, {}};
    for (const auto& S : subsets) {
      const auto e = sign_for(S, f);
      if (!e) return std::nullopt;
      cert.sublinks.push_back({S, *e});
    }
    return cert;
  };

  if (mode == SaktraMode::Fixed) {
    std::vector<std::size_t> id(mu);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return certify(id);
  }

  detail::require_cap(mu, limits.max_mu, "linking-number condition search");
  // every pair is inseparable, so |linking numbers| must match pairwise
  auto extend = [&](const std::vector<std::size_t>& f, std::size_t b) {
    for (std::size_t a = 0; a < b; ++a)
      if (detail::abs64(M(b, a)) != detail::abs64(N(f[b], f[a]))) return false;
    return true;
  };
  auto perm = detail::search_bijections(
      mu, extend, [](std::size_t) {},
      [&](const std::vector<std::size_t>& f) { return certify(f).has_value(); });
  if (!perm) return std::nullopt;
  return certify(*perm);
}

}  // namespace linkq
