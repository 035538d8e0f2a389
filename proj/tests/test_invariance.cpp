#include <catch_amalgamated.hpp>

#include <vector>

#include "linkq/linkq.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace linkq;

namespace {

std::vector<FiniteQuandle> targets() {
  gen::Rng rng(2024);
  return {xn(2), xn(3), xn(4), gen::tc_table(rng, 4), gen::tc_table(rng, 5)};
}

void require_same(const LinkDiagram& a, const LinkDiagram& b,
                  const std::vector<FiniteQuandle>& ts) {
  const auto report = compare_invariants(a, b, ts, 1'000'000);
  for (const auto& c : report.checks) {
    INFO(serialize(a) << "  vs  " << serialize(b) << "  [" << c.name << "]");
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("every single R1 and R2 insertion on small diagrams") {
  const auto ts = targets();
  for (const char* name : {"hopf_pos", "virtual_hopf", "unlink2", "trefoil",
                           "virtual_trefoil", "unknot"}) {
    const auto d = testkit::corpus_diagram(name);
    for (std::size_t c = 0; c < d.component_count(); ++c)
      for (std::size_t p = 0; p <= d.components[c].size(); ++p)
        for (int s : {1, -1})
          for (auto order : {KinkOrder::OverFirst, KinkOrder::UnderFirst})
            require_same(d, r1_insert(d, c, p, s, order), ts);
    for (std::size_t c1 = 0; c1 < d.component_count(); ++c1)
      for (std::size_t p1 = 0; p1 <= d.components[c1].size(); ++p1)
        for (std::size_t c2 = 0; c2 < d.component_count(); ++c2)
          for (std::size_t p2 = 0; p2 <= d.components[c2].size(); ++p2) {
            if (c1 == c2 && p1 == p2) continue;
            for (int s : {1, -1}) require_same(d, r2_insert(d, {c1, p1}, {c2, p2}, s), ts);
          }
  }
}

TEST_CASE("fuzzed corpus keeps its invariants") {
  const auto ts = targets();
  const auto corpus = testkit::corpus();
  for (std::uint64_t run = 0; run < 150; ++run) {
    const auto& [name, d] = corpus[run % corpus.size()];
    const auto g = fuzz(d, run, 1 + run % 20);
    INFO(name << " run " << run);
    require_same(d, g, ts);
  }
}

TEST_CASE("curated equivalent pairs") {
  const auto ts = targets();
  require_same(testkit::corpus_diagram("trefoil"),
               testkit::corpus_diagram("trefoil_kinked"), ts);
  require_same(testkit::corpus_diagram("hopf_pos"),
               testkit::corpus_diagram("hopf_r2"), ts);
  const auto r3 = dihedral_quandle(3);
  CHECK(count_homs_bruteforce(testkit::corpus_diagram("trefoil"), r3) ==
        count_homs_bruteforce(testkit::corpus_diagram("trefoil_kinked"), r3));
  CHECK(render(wirtinger(testkit::corpus_diagram("hopf_pos"))) !=
        render(wirtinger(testkit::corpus_diagram("hopf_r2"))));
}

TEST_CASE("a genuinely different link is told apart") {
  const auto report = compare_invariants(testkit::corpus_diagram("hopf_pos"),
                                         testkit::corpus_diagram("unlink2"),
                                         targets(), 1'000'000);
  CHECK_FALSE(report.passed());
}
