// lq: command-line front end. Every subcommand prints one JSON document on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success (including negative answers), 1 internal
// disagreement between methods, 2 malformed input or usage, 3 search or
// enumeration cap exceeded, 4 precondition violated.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkq/json.hpp"
#include "linkq/linkq.hpp"

namespace {

using linkq::json::json;

constexpr int kExitDisagreement = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitPrecondition = 4;

struct InputError : linkq::Error {
  using linkq::Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<linkq::LinkDiagram> read_links(const std::string& path) {
  try {
    return linkq::parse_link_file(read_file(path));
  } catch (const linkq::ParseError& e) {
    throw linkq::ParseError(path + ": " + e.what(), e.column());
  }
}

linkq::LinkDiagram read_link(const std::string& path) {
  auto links = read_links(path);
  if (links.size() != 1)
    throw InputError(path + ": expected exactly one link, found " +
                     std::to_string(links.size()));
  return links.front();
}

linkq::FiniteQuandle read_target(const std::string& text,
                                 const linkq::SearchLimits& limits) {
  if (text.rfind("xn:", 0) == 0) {
    const std::string n = text.substr(3);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(n, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != n.size() || n.empty() || v < 1)
      throw InputError("bad target '" + text + "': expected xn:N with N >= 1");
    if (v + 1 > limits.max_quandle_size)
      throw linkq::CapExceeded("target X_" + n + " exceeds " +
                               std::to_string(limits.max_quandle_size) +
                               " elements");
    return linkq::xn(static_cast<std::size_t>(v));
  }
  if (text.rfind("table:", 0) == 0) {
    const std::string path = text.substr(6);
    try {
      return linkq::read_table(read_file(path));
    } catch (const linkq::ParseError& e) {
      throw linkq::ParseError(path + ": " + e.what());
    }
  }
  throw InputError("bad target '" + text +
                   "': expected xn:N or table:PATH");
}

json matrix_or_null(const std::optional<linkq::LinkingMatrix>& m) {
  return m ? linkq::json::matrix(*m) : json(nullptr);
}

// ---------------------------------------------------------------------------

json cmd_parse(const std::string& file) {
  json links = json::array();
  for (const auto& d : read_links(file))
    links.push_back({{"components", d.component_count()},
                     {"crossings", d.crossing_count()},
                     {"normalized", linkq::serialize(d)}});
  return {{"links", links}};
}

json cmd_linking(const std::string& file, const linkq::SearchLimits& limits) {
  const auto m = linkq::linking_matrix(read_link(file));
  const auto g = linkq::linking_graph(m);
  return {{"matrix", linkq::json::matrix(m)},
          {"symmetric", linkq::is_classical_consistent(m)},
          {"graph", linkq::json::graph(g)},
          {"connected_components",
           linkq::json::partition(linkq::connected_components(g))},
          {"articulation_points",
           linkq::json::one_based(linkq::articulation_points(g))},
          {"inseparable_sublinks",
           m.mu() <= limits.max_subset_mu
               ? linkq::json::partition(linkq::inseparable_sublinks(m, limits))
               : json(nullptr)}};
}

json cmd_tc(const std::string& file, const linkq::SearchLimits& limits) {
  const auto m = linkq::linking_matrix(read_link(file));
  const auto lf = linkq::family_from_linking(m);
  json orbits = json::array();
  for (std::size_t b = 0; b < lf.family.m; ++b) {
    const auto idx = linkq::index(lf.family.subgroups[b]);
    orbits.push_back({{"base", b + 1},
                      {"size", idx ? linkq::json::integer(*idx) : json(nullptr)}});
  }
  std::optional<linkq::LinkingMatrix> canon;
  if (m.mu() <= limits.max_canonical_mu)
    canon = linkq::canonical_form(m, limits);
  return {{"family", linkq::json::family(lf.family)},
          {"orbits", orbits},
          {"canonical_form", matrix_or_null(canon)}};
}

json cmd_tc_iso(const std::string& f1, const std::string& f2, bool classical,
                const linkq::SearchLimits& limits) {
  const auto a = linkq::linking_matrix(read_link(f1));
  const auto b = linkq::linking_matrix(read_link(f2));
  const auto cert =
      classical ? linkq::tc_isomorphic_classical(a, b, limits)
                : linkq::qs_isomorphic_pm(linkq::LinkFamilyRows::from_matrix(a),
                                          linkq::LinkFamilyRows::from_matrix(b),
                                          limits);
  json out = {{"isomorphic", cert.has_value()},
              {"perm", nullptr},
              {"signs", nullptr}};
  if (cert) {
    const json c = linkq::json::certificate(*cert);
    out["perm"] = c["perm"];
    out["signs"] = c["signs"];
  }
  return out;
}

struct ColorResult {
  json out;
  bool agree = true;
};

ColorResult cmd_color(const std::string& file, const std::string& target,
                      const std::string& method,
                      const linkq::SearchLimits& limits) {
  const auto d = read_link(file);
  const auto t = read_target(target, limits);
  if (method == "brute") {
    const auto k = linkq::count_homs_bruteforce(d, t, limits);
    return {{{"k", k}, {"method", method}, {"target_size", t.size()}}};
  }
  if (method == "propagate") {
    const auto k = linkq::count_homs_tc_propagate(d, t, limits);
    return {{{"k", k}, {"method", method}, {"target_size", t.size()}}};
  }
  if (method == "fixedpoint") {
    const auto k =
        linkq::count_homs_tc_fixedpoint(linkq::linking_matrix(d), t, limits);
    return {{{"k", k}, {"method", method}, {"target_size", t.size()}}};
  }
  const auto brute = linkq::count_homs_bruteforce(d, t, limits);
  const auto prop = linkq::count_homs_tc_propagate(d, t, limits);
  const auto fixed =
      linkq::count_homs_tc_fixedpoint(linkq::linking_matrix(d), t, limits);
  const bool agree = brute == prop && prop == fixed;
  json out = {{"k", agree ? json(brute) : json(nullptr)},
              {"method", method},
              {"methods_agree", agree},
              {"counts",
               {{"brute", brute}, {"propagate", prop}, {"fixedpoint", fixed}}},
              {"target_size", t.size()}};
  return {out, agree};
}

json cmd_group(const std::string& file, const std::string& quotient) {
  const auto d = read_link(file);
  const auto p = quotient == "wirtinger"
                     ? linkq::wirtinger(d)
                     : linkq::nilpotent3(linkq::linking_matrix(d));
  return {{"quotient", quotient},
          {"rendered", linkq::render(p)},
          {"presentation", linkq::json::presentation(p)}};
}

json cmd_saktra(const std::string& f1, const std::string& f2, bool search,
                const linkq::SearchLimits& limits) {
  const auto a = linkq::linking_matrix(read_link(f1));
  const auto b = linkq::linking_matrix(read_link(f2));
  const auto cert = linkq::saktra_condition(
      a, b, search ? linkq::SaktraMode::Search : linkq::SaktraMode::Fixed,
      limits);
  json out = {{"holds", cert.has_value()}, {"perm", nullptr},
              {"sublinks", nullptr}};
  if (cert) {
    const json c = linkq::json::saktra(*cert);
    out["perm"] = c["perm"];
    out["sublinks"] = c["sublinks"];
  }
  return out;
}

struct FuzzResult {
  json out;
  bool passed = true;
};

FuzzResult cmd_fuzz(const std::string& file, std::size_t steps,
                    std::uint64_t seed, bool check,
                    const linkq::SearchLimits& limits) {
  const auto d = read_link(file);
  const auto g = linkq::fuzz(d, seed, steps);
  json out = {{"diagram", linkq::serialize(g)},
              {"passages_added", g.passage_count() - d.passage_count()},
              {"seed", seed},
              {"steps", steps}};
  if (!check) return {out};
  const std::vector<linkq::FiniteQuandle> targets{linkq::xn(2), linkq::xn(3),
                                                  linkq::xn(4)};
  const auto report =
      linkq::compare_invariants(d, g, targets, 1'000'000, limits);
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}});
  out["check"] = {{"passed", report.passed()}, {"checks", checks}};
  return {out, report.passed()};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation-commutative quandle invariants of links"};
  app.require_subcommand(1);

  std::string file, file2, target, method = "all", quotient;
  bool classical = false, search = false, check = false;
  std::size_t steps = 0;
  std::uint64_t seed = 0;

  auto* parse = app.add_subcommand("parse", "validate and normalize a link file");
  parse->add_option("FILE", file)->required();

  auto* linking = app.add_subcommand("linking", "linking matrix and graph");
  linking->add_option("FILE", file)->required();

  auto* tc = app.add_subcommand("tc", "subgroup family of the tc quandle");
  tc->add_option("FILE", file)->required();

  auto* tc_iso = app.add_subcommand("tc-iso", "decide tc quandle isomorphism");
  tc_iso->add_option("FILE1", file)->required();
  tc_iso->add_option("FILE2", file2)->required();
  tc_iso->add_flag("--classical", classical,
                   "assert both links are classical (symmetric matrices)");

  auto* color = app.add_subcommand("color", "count colorings by a quandle");
  color->add_option("FILE", file)->required();
  color->add_option("--target", target, "xn:N or table:PATH")->required();
  color->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "propagate", "fixedpoint", "all"}));

  auto* group = app.add_subcommand("group", "group presentation");
  group->add_option("FILE", file)->required();
  group->add_option("--quotient", quotient)
      ->required()
      ->check(CLI::IsMember({"wirtinger", "nilpotent3"}));

  auto* saktra = app.add_subcommand(
      "saktra", "linking-number condition for the nilpotent quotient");
  saktra->add_option("FILE1", file)->required();
  saktra->add_option("FILE2", file2)->required();
  saktra->add_flag("--search", search, "search over component matchings");

  auto* fuzz = app.add_subcommand("fuzz", "random Reidemeister insertions");
  fuzz->add_option("FILE", file)->required();
  fuzz->add_option("--steps", steps)->required();
  fuzz->add_option("--seed", seed)->required();
  fuzz->add_flag("--check", check, "compare invariants with the input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lq: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    const auto limits = linkq::SearchLimits::from_environment();
    if (*parse) {
      emit(cmd_parse(file));
    } else if (*linking) {
      emit(cmd_linking(file, limits));
    } else if (*tc) {
      emit(cmd_tc(file, limits));
    } else if (*tc_iso) {
      emit(cmd_tc_iso(file, file2, classical, limits));
    } else if (*color) {
      const auto r = cmd_color(file, target, method, limits);
      emit(r.out);
      if (!r.agree) {
        std::cerr << "lq: counting methods disagree\n";
        return kExitDisagreement;
      }
    } else if (*group) {
      emit(cmd_group(file, quotient));
    } else if (*saktra) {
      emit(cmd_saktra(file, file2, search, limits));
    } else if (*fuzz) {
      const auto r = cmd_fuzz(file, steps, seed, check, limits);
      emit(r.out);
      if (!r.passed) {
        std::cerr << "lq: invariants changed under fuzzing\n";
        return kExitDisagreement;
      }
    }
  } catch (const linkq::CapExceeded& e) {
    std::cerr << "lq: " << e.what() << '\n';
    return kExitCap;
  } catch (const linkq::PreconditionError& e) {
    std::cerr << "lq: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const linkq::Error& e) {
    std::cerr << "lq: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lq: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
