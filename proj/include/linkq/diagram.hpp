#pragma once

// Oriented virtual link diagrams as signed Gauss codes.
//
// Text format (one link per line):
//
//   link      := component ("/" component)*
//   component := "*" | passage (WS passage)*
//   passage   := ("O"|"U") INT ("+"|"-")
//
// Virtual crossings are not recorded: the Gauss code determines the diagram
// up to detour moves, which is all the invariants here can see.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkq/error.hpp"

namespace linkq {

enum class Role : std::uint8_t { Over, Under };

using CrossingLabel = std::uint64_t;

/// One passage of a component through a classical crossing.
struct Passage {
  CrossingLabel crossing = 1;
  Role role = Role::Over;
  int sign = 1;  // writhe of the crossing, +1 or -1

  bool operator==(const Passage&) const = default;
};

using PassageSequence = std::vector<Passage>;

/// A link diagram: one cyclic passage sequence per component, read in the
/// direction of the orientation. Every label occurs exactly twice, once
/// Over and once Under, with equal signs.
struct LinkDiagram {
  std::vector<PassageSequence> components;

  std::size_t component_count() const { return components.size(); }

  std::size_t passage_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n;
  }

  std::size_t crossing_count() const { return passage_count() / 2; }

  CrossingLabel max_label() const {
    CrossingLabel m = 0;
    for (const auto& c : components)
      for (const auto& p : c) m = std::max(m, p.crossing);
    return m;
  }

  bool operator==(const LinkDiagram&) const = default;
};

/// Throws ParseError naming the first offending label (in order of first
/// appearance) if `d` breaks a structural invariant.
inline void validate(const LinkDiagram& d) {
  if (d.components.empty())
    throw ParseError("a link needs at least one component");

  struct Seen {
    std::size_t count = 0;
    std::size_t overs = 0;
    int sign = 0;
    bool sign_mismatch = false;
    std::size_t component = 0;
    std::size_t position = 0;
  };
  std::vector<CrossingLabel> order;
  std::unordered_map<CrossingLabel, Seen> seen;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (std::size_t k = 0; k < d.components[i].size(); ++k) {
      const Passage& p = d.components[i][k];
      if (p.crossing == 0)
        throw ParseError("crossing labels must be >= 1");
      if (p.sign != 1 && p.sign != -1)
        throw ParseError("crossing " + std::to_string(p.crossing) +
                         " has a sign other than +1/-1");
      auto [it, inserted] = seen.try_emplace(p.crossing);
      Seen& s = it->second;
      if (inserted) {
        order.push_back(p.crossing);
        s.sign = p.sign;
        s.component = i;
        s.position = k;
      } else if (s.sign != p.sign) {
        s.sign_mismatch = true;
      }
      ++s.count;
      if (p.role == Role::Over) ++s.overs;
    }
  }
  for (CrossingLabel label : order) {
    const Seen& s = seen.at(label);
    const std::string where = " (first seen at component " +
                              std::to_string(s.component + 1) + ", passage " +
                              std::to_string(s.position + 1) + ")";
    const std::string name = "crossing " + std::to_string(label);
    if (s.count != 2)
      throw ParseError(name + " occurs " + std::to_string(s.count) +
                       " times, expected 2" + where);
    if (s.overs != 1)
      throw ParseError(name + " needs one O and one U passage" + where);
    if (s.sign_mismatch)
      throw ParseError(name + " has mismatched signs" + where);
  }
}

namespace detail {

class GaussParser {
 public:
  explicit GaussParser(std::string_view text) : text_(text) {}

  LinkDiagram parse() {
    LinkDiagram d;
    skip_spaces();
    if (at_end()) fail("empty link");
    for (;;) {
      d.components.push_back(component());
      skip_spaces();
      if (at_end()) break;
      if (peek() != '/') fail("expected '/' or end of line");
      ++pos_;
      skip_spaces();
    }
    return d;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_spaces() {
    while (!at_end() && peek() == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string msg = what + " at column " + std::to_string(pos_ + 1);
    if (!at_end()) msg += " near '" + std::string(1, peek()) + "'";
    throw ParseError(msg, pos_ + 1);
  }

  PassageSequence component() {
    if (at_end()) fail("expected a component");
    if (peek() == '*') {
      ++pos_;
      return {};
    }
    PassageSequence seq;
    seq.push_back(passage());
    for (;;) {
      const std::size_t before = pos_;
      skip_spaces();
      if (at_end() || peek() == '/') return seq;
      if (pos_ == before) fail("expected whitespace between passages");
      seq.push_back(passage());
    }
  }

  Passage passage() {
    Passage p;
    if (at_end()) fail("expected a passage");
    if (peek() == 'O')
      p.role = Role::Over;
    else if (peek() == 'U')
      p.role = Role::Under;
    else
      fail("expected 'O' or 'U'");
    ++pos_;
    if (at_end() || peek() < '0' || peek() > '9') fail("expected a label");
    CrossingLabel label = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      const auto digit = static_cast<CrossingLabel>(peek() - '0');
      if (label > (std::numeric_limits<CrossingLabel>::max() - digit) / 10)
        fail("label too large");
      label = label * 10 + digit;
      ++pos_;
    }
    if (label == 0) fail("labels must be >= 1");
    p.crossing = label;
    if (at_end()) fail("expected '+' or '-'");
    if (peek() == '+')
      p.sign = 1;
    else if (peek() == '-')
      p.sign = -1;
    else
      fail("expected '+' or '-'");
    ++pos_;
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and validates one link. Labels are preserved as written.
inline LinkDiagram parse(std::string_view text) {
  LinkDiagram d = detail::GaussParser(text).parse();
  validate(d);
  return d;
}

/// Renumbers labels 1..n in order of first appearance.
inline LinkDiagram normalize(const LinkDiagram& d) {
  std::unordered_map<CrossingLabel, CrossingLabel> relabel;
  LinkDiagram out = d;
  for (auto& c : out.components)
    for (auto& p : c) {
      auto [it, inserted] =
          relabel.try_emplace(p.crossing, relabel.size() + 1);
      p.crossing = it->second;
    }
  return out;
}

/// Normalized text form; parse(serialize(d)) == normalize(d).
inline std::string serialize(const LinkDiagram& d) {
  const LinkDiagram n = normalize(d);
  std::string out;
  for (std::size_t i = 0; i < n.components.size(); ++i) {
    if (i > 0) out += " / ";
    const auto& c = n.components[i];
    if (c.empty()) {
      out += '*';
      continue;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += ' ';
      out += c[k].role == Role::Over ? 'O' : 'U';
      out += std::to_string(c[k].crossing);
      out += c[k].sign > 0 ? '+' : '-';
    }
  }
  return out;
}

/// Parses a whole link file: blank lines and lines starting with '#' are
/// skipped. Errors carry the 1-based line number in the message.
inline std::vector<LinkDiagram> parse_link_file(std::string_view contents) {
  std::vector<LinkDiagram> links;
  std::size_t line_no = 0;
  while (!contents.empty()) {
    ++line_no;
    const std::size_t nl = contents.find('\n');
    std::string_view line = contents.substr(0, nl);
    contents = nl == std::string_view::npos ? std::string_view{}
                                            : contents.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(' ') == std::string_view::npos) continue;
    try {
      links.push_back(parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.column());
    }
  }
  return links;
}

// ---------------------------------------------------------------------------
// Arcs

/// A classical crossing seen from the arc structure. Arc ids are global
/// (see ArcTable::first_arc).
struct ArcCrossing {
  CrossingLabel label = 0;
  std::size_t over_arc = 0;
  std::size_t under_in_arc = 0;
  std::size_t under_out_arc = 0;
  int writhe = 1;
  std::size_t over_component = 0;
  std::size_t under_component = 0;
};

/// Long arcs of a diagram. Component i owns arcs first_arc[i] ..
/// first_arc[i] + arc_counts[i] - 1, i.e. a_{i0}..a_{i(n_i-1)}; arc a_{i0}
/// begins right after the first listed Under passage of component i.
///
/// Crossings are grouped by under component; within component i they are
/// listed as c_{i0}, c_{i1}, ..., where c_{im} leads from a_{im} to
/// a_{i(m+1)}.
struct ArcTable {
  std::vector<std::size_t> first_arc;
  std::vector<std::size_t> arc_counts;
  std::vector<std::size_t> arc_component;
  std::vector<ArcCrossing> crossings;
  std::vector<std::size_t> crossing_offsets;  // size component_count() + 1

  std::size_t component_count() const { return first_arc.size(); }
  std::size_t arc_count() const { return arc_component.size(); }

  std::size_t arc(std::size_t component, std::size_t m) const {
    return first_arc[component] + m;
  }

  std::span<const ArcCrossing> crossings_under(std::size_t component) const {
    return std::span<const ArcCrossing>(crossings)
        .subspan(crossing_offsets[component],
                 crossing_offsets[component + 1] -
                     crossing_offsets[component]);
  }
};

inline ArcTable arc_table(const LinkDiagram& d) {
  ArcTable t;
  const std::size_t mu = d.component_count();

  // under positions per component, and the arc each passage lies on
  std::vector<std::vector<std::size_t>> unders(mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t k = 0; k < d.components[i].size(); ++k)
      if (d.components[i][k].role == Role::Under) unders[i].push_back(k);

  for (std::size_t i = 0; i < mu; ++i) {
    const std::size_t n = std::max<std::size_t>(unders[i].size(), 1);
    t.first_arc.push_back(t.arc_component.size());
    t.arc_counts.push_back(n);
    t.arc_component.insert(t.arc_component.end(), n, i);
  }

  // Arc m of component i spans the passages strictly after unders[i][m];
  // a passage before the first Under lies on the wrap-around arc n_i - 1.
  auto arc_of_passage = [&](std::size_t i, std::size_t k) {
    const auto& u = unders[i];
    if (u.empty()) return t.first_arc[i];
    const auto before = static_cast<std::size_t>(
        std::lower_bound(u.begin(), u.end(), k) - u.begin());
    const std::size_t m = before == 0 ? u.size() - 1 : before - 1;
    return t.first_arc[i] + m;
  };

  struct OverSite {
    std::size_t component;
    std::size_t arc;
  };
  std::unordered_map<CrossingLabel, OverSite> over_sites;
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t k = 0; k < d.components[i].size(); ++k)
      if (d.components[i][k].role == Role::Over)
        over_sites[d.components[i][k].crossing] = {i, arc_of_passage(i, k)};

  t.crossing_offsets.push_back(0);
  for (std::size_t i = 0; i < mu; ++i) {
    const auto& u = unders[i];
    const std::size_t n = u.size();
    for (std::size_t m = 0; m < n; ++m) {
      // c_{im} is the Under passage ending arc m
      const std::size_t pos = u[(m + 1) % n];
      const Passage& p = d.components[i][pos];
      const OverSite& over = over_sites.at(p.crossing);
      ArcCrossing c;
      c.label = p.crossing;
      c.over_arc = over.arc;
      c.over_component = over.component;
      c.under_component = i;
      c.under_in_arc = t.first_arc[i] + m;
      c.under_out_arc = t.first_arc[i] + (m + 1) % n;
      c.writhe = p.sign;
      t.crossings.push_back(c);
    }
    t.crossing_offsets.push_back(t.crossings.size());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Reidemeister insertions

enum class KinkOrder : std::uint8_t { OverFirst, UnderFirst };

/// Inserts a kink [O c s, U c s] (or [U c s, O c s]) with a fresh label c
/// before passage `position` of `component` (0-based; position may equal
/// the component length).
inline LinkDiagram r1_insert(const LinkDiagram& d, std::size_t component,
                             std::size_t position, int sign,
                             KinkOrder order) {
  if (component >= d.component_count())
    throw std::out_of_range("r1_insert: component index out of range");
  if (position > d.components[component].size())
    throw std::out_of_range("r1_insert: position out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("r1_insert: sign must be +1 or -1");
  const CrossingLabel c = d.max_label() + 1;
  const Passage over{c, Role::Over, sign};
  const Passage under{c, Role::Under, sign};
  LinkDiagram out = d;
  auto& seq = out.components[component];
  const auto at = seq.begin() + static_cast<std::ptrdiff_t>(position);
  if (order == KinkOrder::OverFirst)
    seq.insert(at, {over, under});
  else
    seq.insert(at, {under, over});
  return out;
}

/// A gap between passages: before passage `position` of `component`.
struct Site {
  std::size_t component = 0;
  std::size_t position = 0;
};

/// Pushes one strand over another: inserts [O a s, O b -s] at `over_site`
/// and [U b -s, U a s] at `under_site`, with fresh labels a, b. Both sites
/// index the input diagram; on a shared component they must differ.
inline LinkDiagram r2_insert(const LinkDiagram& d, Site over_site,
                             Site under_site, int sign) {
  for (const Site& s : {over_site, under_site}) {
    if (s.component >= d.component_count())
      throw std::out_of_range("r2_insert: component index out of range");
    if (s.position > d.components[s.component].size())
      throw std::out_of_range("r2_insert: position out of range");
  }
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("r2_insert: sign must be +1 or -1");
  if (over_site.component == under_site.component &&
      over_site.position == under_site.position)
    throw std::invalid_argument(
        "r2_insert: sites on one component must be distinct");

  const CrossingLabel a = d.max_label() + 1;
  const CrossingLabel b = a + 1;
  const PassageSequence over_block{{a, Role::Over, sign},
                                   {b, Role::Over, -sign}};
  const PassageSequence under_block{{b, Role::Under, -sign},
                                    {a, Role::Under, sign}};

  LinkDiagram out = d;
  auto insert = [&](const Site& s, const PassageSequence& block) {
    auto& seq = out.components[s.component];
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(s.position),
               block.begin(), block.end());
  };
  // the later site first, so the earlier offset stays valid
  if (over_site.component == under_site.component &&
      over_site.position < under_site.position) {
    insert(under_site, under_block);
    insert(over_site, over_block);
  } else {
    insert(over_site, over_block);
    insert(under_site, under_block);
  }
  return out;
}

/// Applies `steps` random R1/R2 insertions driven by a 64-bit Mersenne
/// twister seeded with `seed`. Draws use plain modular reduction so the
/// output is identical across standard libraries.
inline LinkDiagram fuzz(const LinkDiagram& d, std::uint64_t seed,
                        std::size_t steps) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  auto sign = [&] { return draw(2) == 0 ? 1 : -1; };

  LinkDiagram cur = d;
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t mu = cur.component_count();
    const bool r2 = draw(2) == 1;
    if (r2) {
      Site s1{draw(mu), 0};
      s1.position = draw(cur.components[s1.component].size() + 1);
      Site s2{draw(mu), 0};
      const std::size_t len2 = cur.components[s2.component].size();
      if (s2.component == s1.component) {
        if (len2 == 0) {
          // one gap only; fall back to a kink
          const int s = sign();
          cur = r1_insert(cur, s1.component, 0, s,
                          draw(2) == 0 ? KinkOrder::OverFirst
                                       : KinkOrder::UnderFirst);
          continue;
        }
        // uniform over the len2 gaps different from s1.position
        s2.position = draw(len2);
        if (s2.position >= s1.position) ++s2.position;
      } else {
        s2.position = draw(len2 + 1);
      }
      cur = r2_insert(cur, s1, s2, sign());
    } else {
      const std::size_t c = draw(mu);
      const std::size_t p = draw(cur.components[c].size() + 1);
      const int s = sign();
      cur = r1_insert(
          cur, c, p, s,
          draw(2) == 0 ? KinkOrder::OverFirst : KinkOrder::UnderFirst);
    }
  }
  return cur;
}

}  // namespace linkq
