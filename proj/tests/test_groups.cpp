#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "linkq/groups.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace linkq;

namespace {

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("words reduce freely") {
  Word w;
  w.append(0, 2).append(1, 1).append(1, -1).append(0, -2);
  CHECK(w.empty());
  const Word a = letter(0), b = letter(1, -3);
  const Word c = commutator(a, b);
  CHECK(c.letters() == std::vector<Letter>{{0, 1}, {1, -3}, {0, -1}, {1, 3}});
  CHECK(c.inverse().inverse() == c);
  Word cc = c;
  cc.append(c.inverse());
  CHECK(cc.empty());
  CHECK(c.exponent_sum(0) == 0);
  CHECK(letter(2, 5).exponent_sum(2) == 5);
  CHECK(commutator(a, a).empty());
}

TEST_CASE("rendering") {
  GroupPresentation p{{"a", "b"}, {commutator(letter(0), letter(1, 2)), Word()}};
  CHECK(render(p) == "<a,b | a b^2 a^-1 b^-2, 1>");
  CHECK(render(GroupPresentation{{"x"}, {}}) == "<x | >");
}

TEST_CASE("Wirtinger presentation of the Hopf link") {
  const auto p = wirtinger(testkit::corpus_diagram("hopf_pos"));
  CHECK(render(p) ==
        "<g1_0,g2_0 | g1_0 g2_0 g1_0^-1 g2_0^-1, g2_0 g1_0 g2_0^-1 g1_0^-1>");
}

TEST_CASE("Wirtinger relators have zero exponent sums except at crossings") {
  for (const auto& [name, d] : testkit::corpus()) {
    const auto p = wirtinger(d);
    const auto arcs = arc_table(d);
    CHECK(p.generators.size() == arcs.arc_count());
    CHECK(p.relators.size() == arcs.crossings.size());
    // every relator dies in the abelianization once arcs of a component
    // are identified
    for (const auto& r : p.relators) {
      std::vector<std::int64_t> per_component(d.component_count(), 0);
      for (const auto& l : r.letters())
        per_component[arcs.arc_component[l.generator]] += l.exponent;
      INFO(name);
      for (auto s : per_component) CHECK(s == 0);
    }
  }
}

TEST_CASE("nilpotent presentation") {
  const auto hopf = nilpotent3(linking_matrix(testkit::corpus_diagram("hopf_pos")));
  REQUIRE(hopf.relators.size() == 2 + 4);
  CHECK(render(hopf).rfind("<g1,g2 | g2 g1 g2^-1 g1^-1, g1 g2 g1^-1 g2^-1, ", 0) == 0);

  const auto vh = nilpotent3(linking_matrix(testkit::corpus_diagram("virtual_hopf")));
  REQUIRE(vh.relators.size() == 1 + 4);
  CHECK(vh.relators[0] == commutator(letter(0), letter(1)));

  const auto knot = nilpotent3(LinkingMatrix(1));
  CHECK(render(knot) == "<g1 | >");
  const auto m = LinkingMatrix::from_rows({{0, 2, -1}, {2, 0, 0}, {-1, 0, 0}});
  CHECK(nilpotent3(m).relators[0] ==
        commutator(Word().append(1, 2).append(2, -1), letter(0)));
}

TEST_CASE("abelianization of the nilpotent quotient is free abelian") {
  gen::Rng rng(41);
  auto check = [](const LinkingMatrix& M) {
    for (const auto& r : nilpotent3(M).relators)
      for (std::size_t g = 0; g < M.mu(); ++g) CHECK(r.exponent_sum(g) == 0);
  };
  for (const auto& [name, d] : testkit::corpus()) check(linking_matrix(d));
  for (int i = 0; i < 50; ++i)
    check(gen::matrix(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), 3,
                      false));
}

TEST_CASE("golden renderings") {
  for (const char* name : {"hopf_pos", "trefoil", "virtual_hopf", "chain4"}) {
    INFO(name);
    const auto d = testkit::corpus_diagram(name);
    CHECK(render(wirtinger(d)) ==
          strip(testkit::golden(std::string(name) + ".wirtinger.txt")));
    CHECK(render(nilpotent3(linking_matrix(d))) ==
          strip(testkit::golden(std::string(name) + ".nilpotent3.txt")));
  }
}

TEST_CASE("linking-number condition") {
  const auto hp = linking_matrix(testkit::corpus_diagram("hopf_pos"));
  const auto hn = linking_matrix(testkit::corpus_diagram("hopf_neg"));
  const auto c = saktra_condition(hp, hn, SaktraMode::Fixed);
  REQUIRE(c.has_value());
  CHECK(c->perm == std::vector<std::size_t>{0, 1});
  REQUIRE(c->sublinks.size() == 1);
  CHECK(c->sublinks[0].components == std::vector<std::size_t>{0, 1});
  CHECK(c->sublinks[0].sign == -1);

  const auto chain = linking_matrix(testkit::corpus_diagram("chain4"));
  const auto square = linking_matrix(testkit::corpus_diagram("square4"));
  CHECK_FALSE(saktra_condition(chain, square, SaktraMode::Fixed));
  CHECK_FALSE(saktra_condition(chain, square, SaktraMode::Search));
  CHECK_FALSE(saktra_condition(chain, hp, SaktraMode::Fixed));

  // flipping one edge of the 4-cycle changes the sign product
  auto odd = square;
  odd(0, 1) = odd(1, 0) = -1;
  CHECK_FALSE(saktra_condition(square, odd, SaktraMode::Fixed));
  CHECK_FALSE(saktra_condition(square, odd, SaktraMode::Search));

  const auto relabeled = gen::relabel(square, {1, 0, 2, 3}, {1, 1, 1, 1});
  CHECK_FALSE(saktra_condition(square, relabeled, SaktraMode::Fixed));
  const auto s = saktra_condition(square, relabeled, SaktraMode::Search);
  REQUIRE(s.has_value());
  CHECK(s->perm.size() == 4);

  CHECK_THROWS_AS(saktra_condition(linking_matrix(testkit::corpus_diagram("virtual_hopf")),
                                   hp, SaktraMode::Fixed),
                  PreconditionError);
}

TEST_CASE("small presentation examples") {
  const auto trefoil = wirtinger(testkit::corpus_diagram("trefoil"));
  CHECK(trefoil.generators.size() == 3);
  REQUIRE(trefoil.relators.size() == 3);
  for (const auto& r : trefoil.relators) CHECK(r.letters().size() == 4);
  const auto unknot = wirtinger(testkit::corpus_diagram("unknot"));
  CHECK(unknot.generators.size() == 1);
  CHECK(unknot.relators.empty());

  const auto zero = nilpotent3(LinkingMatrix(3));
  CHECK(zero.relators.size() == 3 * 3 * 2);

  // the 4-cycle against its global negation: one sign for the whole set
  const auto square = linking_matrix(testkit::corpus_diagram("square4"));
  const auto neg = gen::relabel(square, {0, 1, 2, 3}, {-1, -1, -1, -1});
  const auto c = saktra_condition(square, neg, SaktraMode::Fixed);
  REQUIRE(c.has_value());
  for (const auto& s : c->sublinks) {
    bool linked = false;
    for (std::size_t j : s.components)
      for (std::size_t k : s.components) linked = linked || square(j, k) != 0;
    // an unlinked pair fits either sign and reports +1
    CHECK(s.sign == (linked ? -1 : 1));
  }
  CHECK(c->sublinks[1].components == std::vector<std::size_t>{0, 1, 2, 3});
}
