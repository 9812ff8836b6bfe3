#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "domcrit/constructions.hpp"
#include "domcrit/enumerate.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/matching.hpp"
#include "domcrit/rng.hpp"
#include "oracles.hpp"

using namespace domcrit;

namespace {

void check_report(const Graph& g) {
  MatchingReport report = maximum_matching(g);
  CHECK(report.nu == testsupport::nu_by_recursion(g));
  CHECK(report.deficiency == g.n() - 2 * report.nu);
  CHECK(static_cast<int>(report.matching.edges.size()) == report.nu);
  CHECK(std::is_sorted(report.matching.edges.begin(), report.matching.edges.end()));
  std::set<int> used;
  for (auto [u, v] : report.matching.edges) {
    CHECK(u < v);
    CHECK(g.has_edge(u, v));
    CHECK(used.insert(u).second);
    CHECK(used.insert(v).second);
  }
}

}  // namespace

TEST_CASE("matching sizes of standard graphs") {
  CHECK(maximum_matching(Graph(0)).nu == 0);
  CHECK(maximum_matching(Graph(5)).nu == 0);
  for (int n = 3; n <= 9; ++n) CHECK(maximum_matching(cycle_graph(n)).nu == n / 2);
  for (int n = 1; n <= 9; ++n) CHECK(maximum_matching(path_graph(n)).nu == n / 2);
  for (int n = 2; n <= 9; ++n) CHECK(maximum_matching(complete_graph(n)).nu == n / 2);
  CHECK(maximum_matching(star_graph(6)).nu == 1);
  CHECK(maximum_matching(cocktail_party_graph(4)).nu == 4);
  CHECK(maximum_matching(fig1_nine_vertex()).nu == 3);

  // odd cycles force blossom handling
  Graph tricky = disjoint_union(cycle_graph(5), cycle_graph(7));
  CHECK(maximum_matching(tricky).nu == 5);
}

TEST_CASE("blossom matcher agrees with the recursion oracle") {
  for (const auto& level : enumerate_levels(6))
    for (const Graph& g : level) check_report(g);
  Rng rng(20250818);
  for (int round = 0; round < 200; ++round) {
    int n = 7 + rng.bounded(5);
    check_report(random_graph(n, 0.1 + 0.8 * rng.unit(), rng));
  }
}

TEST_CASE("decomposition structure") {
  // the nine vertex example: six outside vertices are exposable, the
  // independent triple is their neighborhood
  MatchingReport fig1 = maximum_matching(fig1_nine_vertex());
  CHECK(fig1.ge.d == (VertexSet::full(9) - VertexSet::full(3)));
  CHECK(fig1.ge.a == VertexSet::full(3));
  CHECK(fig1.ge.c == VertexSet());
  CHECK(fig1.deficiency == 3);

  auto check_ge = [](const Graph& g) {
    MatchingReport report = maximum_matching(g);
    CHECK(report.ge.d == testsupport::exposable_vertices(g));
    CHECK(report.ge.a == [&] {
      VertexSet a;
      for (int v : report.ge.d) a |= g.neighbors(v);
      return a - report.ge.d;
    }());
    CHECK(report.ge.c == (g.vertices() - report.ge.d - report.ge.a));
    // the deletion bound attained by A equals the deficiency
    ComponentSummary summary = components_after_deletion(g, report.ge.a);
    CHECK(summary.odd_count - report.ge.a.count() == report.deficiency);
  };
  for (const auto& level : enumerate_levels(6))
    for (const Graph& g : level) check_ge(g);
  Rng rng(31337);
  for (int round = 0; round < 120; ++round)
    check_ge(random_graph(5 + rng.bounded(5), 0.1 + 0.8 * rng.unit(), rng));
}

TEST_CASE("deletion witness attains the deficiency") {
  auto check = [](const Graph& g) {
    MatchingReport report = maximum_matching(g);
    DeficiencyWitness witness = tutte_witness(g);
    ComponentSummary summary = components_after_deletion(g, witness.s);
    CHECK(witness.deficit == summary.odd_count - witness.s.count());
    CHECK(witness.deficit == report.deficiency);
    CHECK(witness.deficit == testsupport::max_deficiency_by_subsets(g));
  };
  for (const auto& level : enumerate_levels(6))
    for (const Graph& g : level) check(g);
  check(fig1_nine_vertex());
  check(cocktail_party_graph(3));
}

TEST_CASE("perfect and near perfect matchings") {
  CHECK(has_perfect_matching(cycle_graph(6)));
  CHECK_FALSE(has_perfect_matching(cycle_graph(5)));
  CHECK(has_perfect_matching(cocktail_party_graph(4)));
  CHECK_FALSE(has_perfect_matching(star_graph(3)));

  CHECK(has_near_perfect_matching(cycle_graph(5)));
  CHECK(has_near_perfect_matching(Graph(1)));
  CHECK_FALSE(has_near_perfect_matching(cycle_graph(6)));  // even order: false by convention
  CHECK_FALSE(has_near_perfect_matching(fig1_nine_vertex()));
  CHECK_FALSE(has_near_perfect_matching(triple_isolated()));
}

TEST_CASE("near perfect matching witness") {
  CHECK_FALSE(near_pm_witness(cycle_graph(7)).has_value());
  CHECK_FALSE(near_pm_witness(Graph(1)).has_value());
  auto witness = near_pm_witness(fig1_nine_vertex());
  REQUIRE(witness.has_value());
  CHECK(witness->s == VertexSet::full(3));
  CHECK(witness->deficit >= 3);
  ComponentSummary summary = components_after_deletion(fig1_nine_vertex(), witness->s);
  CHECK(summary.odd_count - witness->s.count() == witness->deficit);
  CHECK_THROWS_AS(near_pm_witness(cycle_graph(6)), std::invalid_argument);
}

TEST_CASE("near perfect matching three way equivalence") {
  auto check = [](const Graph& g) {
    bool by_nu = has_near_perfect_matching(g);
    bool by_witness = !near_pm_witness(g).has_value();
    bool by_oracle = testsupport::nu_by_recursion(g) == (g.n() - 1) / 2;
    bool by_deficiency = testsupport::max_deficiency_by_subsets(g) <= 1;
    CHECK(by_nu == by_witness);
    CHECK(by_nu == by_oracle);
    CHECK(by_nu == by_deficiency);
  };
  for (const auto& level : enumerate_levels(7))
    for (const Graph& g : level)
      if (g.n() % 2 == 1) check(g);
  Rng rng(271828);
  for (int round = 0; round < 100; ++round) {
    int n = 2 * rng.bounded(5) + 1;  // odd, up to 9
    check(random_graph(n, 0.1 + 0.8 * rng.unit(), rng));
  }
}

TEST_CASE("factor critical and bicritical graphs") {
  CHECK(is_factor_critical(cycle_graph(5)));
  CHECK(is_factor_critical(cycle_graph(7)));
  CHECK(is_factor_critical(complete_graph(5)));
  CHECK(is_factor_critical(Graph(1)));
  CHECK_FALSE(is_factor_critical(cycle_graph(6)));
  CHECK_FALSE(is_factor_critical(path_graph(5)));
  CHECK_FALSE(is_factor_critical(fig1_nine_vertex()));

  CHECK(is_bicritical(complete_graph(4)));
  CHECK(is_bicritical(complete_graph(6)));
  CHECK(is_bicritical(cocktail_party_graph(3)));
  CHECK_FALSE(is_bicritical(cycle_graph(6)));
  CHECK_FALSE(is_bicritical(path_graph(4)));
}
