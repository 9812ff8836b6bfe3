#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcrit/canonical.hpp"
#include "domcrit/constructions.hpp"
#include "domcrit/enumerate.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/rng.hpp"
#include "oracles.hpp"

using namespace domcrit;

TEST_CASE("vertex set basics") {
  VertexSet s;
  CHECK(s.empty());
  CHECK(s.count() == 0);
  CHECK(s.lowest() == -1);
  s.add(3);
  s.add(60);
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK(s.contains(60));
  CHECK_FALSE(s.contains(4));
  CHECK(s.lowest() == 3);
  s.remove(3);
  CHECK(s.lowest() == 60);

  VertexSet a = VertexSet::single(1) | VertexSet::single(2);
  VertexSet b = VertexSet::single(2) | VertexSet::single(5);
  CHECK((a & b) == VertexSet::single(2));
  CHECK((a | b).count() == 3);
  CHECK((a - b) == VertexSet::single(1));
  CHECK(a.intersects(b));
  CHECK(VertexSet::single(2).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(VertexSet::full(4).count() == 4);
  CHECK(VertexSet::full(64).count() == 64);

  std::vector<int> seen;
  for (int v : a | b) seen.push_back(v);
  CHECK(seen == std::vector<int>{1, 2, 5});
  CHECK((a | b).to_vector() == seen);
}

TEST_CASE("graph construction and adjacency") {
  Graph g(5);
  CHECK(g.n() == 5);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // idempotent
  g.add_edge(3, 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 1);
  CHECK(g.min_degree() == 0);
  CHECK(g.neighbors(4) == VertexSet::single(3));
  CHECK(g.closed_neighborhood(4) == (VertexSet::single(3) | VertexSet::single(4)));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {3, 4}});

  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);

  Graph h = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(h.edge_count() == 2);
  CHECK(h == path_graph(3));
}

TEST_CASE("components and induced subgraphs") {
  Graph g = disjoint_union(cycle_graph(3), path_graph(2));
  ComponentSummary summary = components(g);
  CHECK(summary.total == 2);
  CHECK(summary.odd_count == 1);
  CHECK(summary.even_count == 1);
  CHECK(summary.components[0].count() == 3);
  CHECK(summary.components[1].count() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle_graph(5)));

  ComponentSummary after = components_after_deletion(cycle_graph(6),
                                                     VertexSet::single(0) | VertexSet::single(3));
  CHECK(after.total == 2);
  CHECK(after.even_count == 2);

  Graph sub = induced_subgraph(cycle_graph(5), VertexSet::full(5) - VertexSet::single(0));
  CHECK(sub == path_graph(4));

  CHECK(is_independent_set(fig1_nine_vertex(), VertexSet::full(3)));
  CHECK_FALSE(is_independent_set(cycle_graph(4), VertexSet::single(0) | VertexSet::single(1)));

  std::vector<int> image = {4, 3, 2, 1, 0};
  Graph rev = apply_relabelling(path_graph(5), image);
  CHECK(rev == path_graph(5));  // path is reversal symmetric
}

TEST_CASE("graph6 round trips") {
  std::vector<Graph> specimens = {Graph(0),        Graph(1),          complete_graph(5),
                                  cycle_graph(7),  star_graph(6),     cocktail_party_graph(3),
                                  triple_isolated(), fig1_nine_vertex()};
  for (const Graph& g : specimens) {
    CAPTURE(g.n());
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  for (const Graph& g : enumerate_graphs(5)) {
    std::string enc = to_graph6(g);
    CHECK(parse_graph6(enc) == g);
    CHECK(testsupport::decode_graph6_reference(enc) == g);
  }
  CHECK(to_graph6(cocktail_party_graph(3)) == "E]~o");
  CHECK(to_graph6(fig1_nine_vertex()) == "HBYdEB?");
  CHECK(to_graph6(triple_isolated()) == "B?");

  // header form
  CHECK(parse_graph6(">>graph6<<B?") == triple_isolated());

  // extended length form at the order cap
  Graph big(63);
  big.add_edge(0, 62);
  big.add_edge(30, 31);
  CHECK(to_graph6(big)[0] == '~');
  CHECK(parse_graph6(to_graph6(big)) == big);
  Graph cap(64);
  cap.add_edge(0, 63);
  CHECK(parse_graph6(to_graph6(cap)) == cap);
}

namespace {

Graph6ErrorKind kind_of(const std::string& text) {
  try {
    parse_graph6(text);
  } catch (const Graph6Error& e) {
    return e.kind();
  }
  FAIL("expected a parse failure for: " << text);
  return Graph6ErrorKind::MalformedLength;
}

}  // namespace

TEST_CASE("graph6 error taxonomy") {
  CHECK(kind_of("") == Graph6ErrorKind::MalformedLength);
  CHECK(kind_of(" ") == Graph6ErrorKind::MalformedLength);
  CHECK(kind_of("~??") == Graph6ErrorKind::MalformedLength);
  CHECK(kind_of("~?@@") == Graph6ErrorKind::UnsupportedOrder);  // n = 65
  CHECK(kind_of("~~??????") == Graph6ErrorKind::UnsupportedOrder);
  CHECK(kind_of(":Fa@x") == Graph6ErrorKind::UnsupportedFormat);
  CHECK(kind_of("&B??") == Graph6ErrorKind::UnsupportedFormat);
  CHECK(kind_of(">>sparse6<<:Fa@x") == Graph6ErrorKind::UnsupportedFormat);
  CHECK(kind_of("E") == Graph6ErrorKind::TruncatedBits);
  CHECK(kind_of("E]~") == Graph6ErrorKind::TruncatedBits);
  CHECK(kind_of("B!") == Graph6ErrorKind::InvalidByte);
  CHECK(kind_of("B??") == Graph6ErrorKind::TrailingGarbage);
  CHECK(kind_of("B@") == Graph6ErrorKind::NonzeroPadding);

  try {
    parse_graph6("B!");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 1);
    CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
  }
  CHECK(std::string(graph6_error_kind_name(Graph6ErrorKind::NonzeroPadding)) ==
        "nonzero-padding");
}

TEST_CASE("named constructions") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_graph(1).n() == 1);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(cycle_graph(6).min_degree() == 2);
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(star_graph(5).degree(0) == 5);
  CHECK(star_graph(5).edge_count() == 5);

  Graph cp = cocktail_party_graph(3);
  CHECK(cp.n() == 6);
  CHECK(cp.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(cp.degree(v) == 4);
  CHECK_FALSE(cp.has_edge(0, 1));
  CHECK_FALSE(cp.has_edge(2, 3));
  CHECK_FALSE(cp.has_edge(4, 5));
  CHECK(cocktail_party_graph(1) == Graph(2));

  Graph fig1 = fig1_nine_vertex();
  CHECK(fig1.n() == 9);
  CHECK(fig1.edge_count() == 12);
  for (int v = 0; v < 3; ++v) CHECK(fig1.degree(v) == 4);
  for (int v = 3; v < 9; ++v) CHECK(fig1.degree(v) == 2);
  CHECK(is_independent_set(fig1, VertexSet::full(3)));
  CHECK(is_independent_set(fig1, VertexSet::full(9) - VertexSet::full(3)));

  Graph both = disjoint_union(cycle_graph(3), complete_graph(2));
  CHECK(both.n() == 5);
  CHECK(both.edge_count() == 4);
  CHECK(both.has_edge(3, 4));

  Graph cone = add_universal_vertex(cycle_graph(4));
  CHECK(cone.n() == 5);
  CHECK(cone.degree(4) == 4);

  CHECK(construct_named("cycle", std::vector<std::string>{"5"}) == cycle_graph(5));
  CHECK(construct_named("fig1_nine_vertex", {}) == fig1_nine_vertex());
  CHECK_THROWS_AS(construct_named("petersen", {}), std::invalid_argument);
  CHECK_THROWS_AS(construct_named("cycle", std::vector<std::string>{"x"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_named("cycle", std::vector<std::string>{"5", "6"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_named("cycle", std::vector<std::string>{"2"}),
                  std::invalid_argument);
}

namespace {

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.bounded(i + 1))]);
  return perm;
}

}  // namespace

TEST_CASE("canonical form is an isomorphism invariant") {
  Rng rng(20240817);
  for (const Graph& g : enumerate_graphs(5)) {
    std::string canon = canonical_form(g);
    for (int round = 0; round < 5; ++round) {
      Graph shuffled = apply_relabelling(g, random_permutation(g.n(), rng));
      CHECK(canonical_form(shuffled) == canon);
      CHECK(are_isomorphic(g, shuffled));
    }
  }
}

TEST_CASE("canonical labelling realizes the canonical form") {
  Rng rng(7);
  std::vector<Graph> specimens = enumerate_graphs(6, true);
  specimens.push_back(fig1_nine_vertex());
  specimens.push_back(cocktail_party_graph(4));
  for (const Graph& g : specimens) {
    Graph relabelled = apply_relabelling(g, canonical_labelling(g));
    CHECK(to_graph6(relabelled) == canonical_form(g));
  }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
  // same order, size, and degree sequence, different graphs
  Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(two_triangles));
  CHECK_FALSE(are_isomorphic(cycle_graph(5), path_graph(5)));

  CHECK(are_isomorphic(cocktail_party_graph(3),
                       Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                             {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                             {2, 4}, {2, 5}, {3, 4}, {3, 5}})));

  // spot check against the permutation oracle
  std::vector<Graph> level = enumerate_graphs(6);
  Rng rng(99);
  for (int round = 0; round < 60; ++round) {
    const Graph& a = level[static_cast<std::size_t>(rng.bounded(static_cast<int>(level.size())))];
    const Graph& b = level[static_cast<std::size_t>(rng.bounded(static_cast<int>(level.size())))];
    CHECK(are_isomorphic(a, b) == testsupport::isomorphic_by_permutation(a, b));
  }
}

TEST_CASE("enumeration counts match the catalog") {
  auto levels = enumerate_levels(7);
  std::vector<std::size_t> sizes;
  for (const auto& level : levels) sizes.push_back(level.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 4, 11, 34, 156, 1044});

  auto connected = enumerate_levels(7, true);
  sizes.clear();
  for (const auto& level : connected) sizes.push_back(level.size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 6, 21, 112, 853});

  // levels are sorted and duplicate free by canonical string
  for (const auto& level : levels) {
    std::vector<std::string> canons;
    for (const Graph& g : level) canons.push_back(canonical_form(g));
    CHECK(std::is_sorted(canons.begin(), canons.end()));
    CHECK(std::adjacent_find(canons.begin(), canons.end()) == canons.end());
  }
  for (const auto& level : connected)
    for (const Graph& g : level) CHECK(is_connected(g));

  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(10), std::invalid_argument);
}
