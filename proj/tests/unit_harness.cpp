#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "domcrit/canonical.hpp"
#include "domcrit/constructions.hpp"
#include "domcrit/enumerate.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/harness.hpp"
#include "domcrit/serialize.hpp"
#include "domcrit/version.hpp"

using namespace domcrit;
using nlohmann::json;

TEST_CASE("corpus loading") {
  std::istringstream in(
      "# header comment\n"
      "B?\r\n"
      "\n"
      "  E]~o  \n"
      "# trailing comment\n");
  Corpus corpus = load_corpus(in, "test");
  CHECK(corpus.id == "test");
  REQUIRE(corpus.graphs.size() == 2);
  CHECK(corpus.graphs[0] == triple_isolated());
  CHECK(corpus.graphs[1] == cocktail_party_graph(3));
  CHECK(corpus.exhaustive_orders.empty());
  CHECK_FALSE(corpus.sampled);

  std::istringstream bad("B?\nnot graph6 ***\n");
  try {
    load_corpus(bad, "badfile");
    FAIL("expected a parse failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("badfile:2:") != std::string::npos);
  }

  CHECK_THROWS_AS(load_corpus_file("/nonexistent/corpus.g6"), std::runtime_error);
}

TEST_CASE("enumerated corpora") {
  Corpus corpus = enumerate_corpus(1, 5);
  CHECK(corpus.id == "enumerate:1..5");
  CHECK(corpus.exhaustive_orders == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(corpus.graphs.size() == 1 + 2 + 4 + 11 + 34);

  Corpus connected = enumerate_corpus(4, 5, true);
  CHECK(connected.graphs.size() == 6 + 21);
  CHECK(connected.id == "enumerate-connected:4..5");

  CHECK_THROWS_AS(enumerate_corpus(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_corpus(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_corpus(5, 4), std::invalid_argument);
}

TEST_CASE("sampled corpora are reproducible") {
  std::vector<int> orders = {5, 7, 9};
  Corpus a = sampled_corpus(40, orders, 12345);
  Corpus b = sampled_corpus(40, orders, 12345);
  Corpus c = sampled_corpus(40, orders, 54321);
  REQUIRE(a.graphs.size() == 40);
  CHECK(a.sampled);
  CHECK(a.seed == 12345);
  bool all_equal = true;
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(a.graphs[i] == b.graphs[i]);
    CHECK((a.graphs[i].n() == 5 || a.graphs[i].n() == 7 || a.graphs[i].n() == 9));
    if (!(to_graph6(a.graphs[i]) == to_graph6(c.graphs[i]))) all_equal = false;
  }
  CHECK_FALSE(all_equal);  // a different seed should not reproduce the corpus

  CHECK_THROWS_AS(sampled_corpus(5, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(sampled_corpus(5, {0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(sampled_corpus(-1, {5}, 1), std::invalid_argument);
}

TEST_CASE("predicate parsing") {
  CHECK(parse_predicate("connected")(cycle_graph(5)));
  CHECK_FALSE(parse_predicate("connected")(triple_isolated()));
  CHECK(parse_predicate("vertex-critical")(cycle_graph(4)));
  CHECK_FALSE(parse_predicate("vertex-critical")(path_graph(4)));
  CHECK(parse_predicate("gamma=3")(fig1_nine_vertex()));
  CHECK_FALSE(parse_predicate("gamma=3")(cycle_graph(4)));
  CHECK(parse_predicate("star-free=5")(fig1_nine_vertex()));
  CHECK_FALSE(parse_predicate("star-free=4")(fig1_nine_vertex()));
  CHECK(parse_predicate("parity=odd")(fig1_nine_vertex()));
  CHECK(parse_predicate("parity=even")(cycle_graph(4)));
  CHECK(parse_predicate("c_o=3")(triple_isolated()));
  CHECK(parse_predicate("c_o=1")(cycle_graph(5)));
  CHECK(parse_predicate("min-degree=2")(cycle_graph(5)));
  CHECK_FALSE(parse_predicate("min-degree=2")(path_graph(5)));
  CHECK(parse_predicate("order=5")(cycle_graph(5)));
  CHECK(parse_predicate("order=3..6")(cycle_graph(5)));
  CHECK_FALSE(parse_predicate("order=3..4")(cycle_graph(5)));
  CHECK(parse_predicate("order=7..")(fig1_nine_vertex()));
  CHECK(parse_predicate("order=..4")(cycle_graph(4)));

  CHECK_THROWS_AS(parse_predicate("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("gamma"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("gamma=x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("connected=yes"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("parity=sideways"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("star-free=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("order=.."), std::invalid_argument);
}

TEST_CASE("filtering the small catalog for 2-critical graphs") {
  Corpus corpus = enumerate_corpus(1, 6);
  std::vector<GraphPredicate> predicates = {parse_predicate("gamma=2"),
                                            parse_predicate("vertex-critical")};
  std::vector<Graph> kept = filter_corpus(corpus.graphs, predicates);
  std::set<std::string> canons;
  for (const Graph& g : kept) canons.insert(canonical_form(g));
  std::set<std::string> expected = {canonical_form(cocktail_party_graph(1)),
                                    canonical_form(cocktail_party_graph(2)),
                                    canonical_form(cocktail_party_graph(3))};
  CHECK(canons == expected);
  CHECK(kept.size() == 3);
}

TEST_CASE("the 2-critical catalog suite") {
  Corpus corpus = enumerate_corpus(1, 6);
  CorpusReport report = verify_2critical(corpus);
  CHECK(report.pass);
  CHECK(report.mode == "exhaustive");
  CHECK(report.suite == "2critical");
  CHECK(report.violations.empty());
  CHECK(report.exceptions.empty());
  REQUIRE(report.rows.size() == 6);
  for (const OrderRow& row : report.rows) {
    long expect = row.order % 2 == 0 ? 1 : 0;
    CHECK(row.candidates == expect);
    CHECK(row.passed == expect);
    CHECK(row.violations == 0);
  }

  // a corpus claiming completeness but missing the expected graph at order 2
  Corpus broken;
  broken.id = "broken";
  broken.graphs = {Graph(1), complete_graph(2)};
  broken.exhaustive_orders = {1, 2};
  CorpusReport missing = verify_2critical(broken);
  CHECK_FALSE(missing.pass);
  REQUIRE(missing.violations.size() == 1);
  CHECK(missing.violations[0].reason == "missing-expected");
  CHECK(missing.violations[0].order == 2);

  // without the completeness claim the same corpus is only membership checked
  broken.exhaustive_orders.clear();
  CorpusReport sampled = verify_2critical(broken);
  CHECK(sampled.mode == "sampled");
  CHECK(sampled.pass);
}

TEST_CASE("matching suite validation and candidate handling") {
  Corpus corpus;
  corpus.id = "handpicked";
  corpus.graphs = {cycle_graph(7), fig1_nine_vertex(), complete_graph(5), cycle_graph(4)};

  CHECK_THROWS_AS(verify_theorem_matching(corpus, 6, Parity::Odd), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_matching(corpus, 7, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_matching(corpus, 4, Parity::Even), std::invalid_argument);

  CorpusReport report = verify_theorem_matching(corpus, 7, Parity::Odd);
  CHECK(report.suite == "matching:7:odd");
  CHECK(report.pass);  // the nine vertex graph is a known exception, not a violation
  CHECK(report.violations.empty());
  REQUIRE(report.exceptions.size() == 1);
  CHECK(report.exceptions[0].order == 9);
  CHECK(report.exceptions[0].canonical == canonical_form(fig1_nine_vertex()));
  CHECK(report.exceptions[0].reason == "known-exception");
  json certificate = json::parse(report.exceptions[0].certificate_json);
  CHECK(certificate["conclusion"] == "near-perfect-matching");
  CHECK(certificate["witness"]["deficit"] >= 3);
  CHECK(certificate["analysis"]["claim1_ok"] == true);

  long candidates = 0, passed = 0;
  for (const OrderRow& row : report.rows) {
    candidates += row.candidates;
    passed += row.passed;
  }
  CHECK(candidates == 2);  // the 7-cycle and the nine vertex graph
  CHECK(passed == 1);

  std::set<std::string> filters(report.filters.begin(), report.filters.end());
  CHECK(filters.count("gamma=3") == 1);
  CHECK(filters.count("star-free=7") == 1);
  CHECK(filters.count("parity=odd") == 1);
  CHECK(filters.count("c_o=1") == 1);
  CHECK(filters.count("order!=13") == 1);
}

TEST_CASE("structural suites over the small catalog") {
  Corpus corpus = enumerate_corpus(1, 6);
  CorpusReport cut = verify_cut_lemma(corpus);
  CHECK(cut.pass);
  CHECK(cut.exceptions.empty());
  long cut_candidates = 0;
  for (const OrderRow& row : cut.rows) cut_candidates += row.candidates;
  CHECK(cut_candidates > 0);

  CorpusReport conn = verify_3connectivity(corpus);
  CHECK(conn.pass);
  CHECK(conn.suite == "3conn");
}

TEST_CASE("reports are deterministic across worker counts") {
  Corpus corpus = enumerate_corpus(1, 7);
  VerifyOptions serial;
  serial.workers = 1;
  VerifyOptions parallel;
  parallel.workers = 4;
  CorpusReport a = verify_theorem_matching(corpus, 7, Parity::Odd, serial);
  CorpusReport b = verify_theorem_matching(corpus, 7, Parity::Odd, parallel);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv() == b.to_csv());

  CorpusReport c = verify_cut_lemma(corpus, serial);
  CorpusReport d = verify_cut_lemma(corpus, parallel);
  CHECK(c.to_json() == d.to_json());
}

TEST_CASE("report serialization shape") {
  Corpus corpus;
  corpus.id = "tiny";
  corpus.graphs = {Graph(1)};
  CorpusReport report = verify_2critical(corpus);
  CHECK(report.to_csv() == "order,candidates,passed,violations,exceptions\n1,0,0,0,0\n");

  auto j = nlohmann::ordered_json::parse(report.to_json());
  CHECK(j["tool"] == "domcrit");
  CHECK(j["version"] == kVersion);
  CHECK(j["suite"] == "2critical");
  CHECK(j["corpus"] == "tiny");
  CHECK(j["mode"] == "sampled");
  CHECK(j["seed"] == 0);
  CHECK(j["pass"] == true);
  REQUIRE(j["orders"].size() == 1);
  std::vector<std::string> row_keys;
  for (auto& [key, value] : j["orders"][0].items()) row_keys.push_back(key);
  CHECK(row_keys ==
        std::vector<std::string>{"order", "candidates", "passed", "violations", "exceptions"});
}

TEST_CASE("witness analysis of the nine vertex exception") {
  WitnessAnalysis analysis = minimal_witness_analysis(fig1_nine_vertex());
  CHECK(analysis.s == VertexSet::full(3));
  CHECK(analysis.surplus == 3);
  CHECK(analysis.summary.odd_count == 6);
  CHECK(analysis.summary.even_count == 0);
  REQUIRE(analysis.attachments.size() == 6);
  for (const VertexSet& attach : analysis.attachments) CHECK(attach.count() == 2);
  CHECK(analysis.d == 2);
  REQUIRE(analysis.normal_pairs.size() == 3);
  CHECK(analysis.normal_pairs ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(analysis.normal_bound == 3);
  CHECK(analysis.claim1_ok);

  json j = json::parse(to_json(analysis));
  CHECK(j["s"] == json::array({0, 1, 2}));
  CHECK(j["d"] == 2);
  CHECK(j["normal_bound"] == 3);

  // empty deletion set: three isolated vertices already miss the conclusion
  WitnessAnalysis bare = minimal_witness_analysis(triple_isolated());
  CHECK(bare.s.empty());
  CHECK(bare.summary.odd_count == 3);
  CHECK(bare.d == 0);
  CHECK(bare.normal_pairs.empty());
  CHECK(bare.claim1_ok);  // vacuous

  CHECK_THROWS_AS(minimal_witness_analysis(cycle_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(minimal_witness_analysis(complete_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(minimal_witness_analysis(cycle_graph(7)), std::invalid_argument);
}

TEST_CASE("analysis records carry the pinned keys") {
  json record = json::parse(analyze_graph_json(fig1_nine_vertex()));
  CHECK(record["gamma"] == 3);
  CHECK(record["vertex_critical"] == true);
  CHECK(record["deficiency"] == 3);
  CHECK(record["near_pm"] == false);
  CHECK(record["order"] == 9);
  CHECK(record["graph6"] == "HBYdEB?");
  CHECK(record["criticality"]["dv"]["0"] == json::array({json::array({1, 2})}));
  CHECK(record["criticality"]["facts"]["f1"] == true);
  CHECK(record["tutte_witness"]["s"] == json::array({0, 1, 2}));
  CHECK(record["star_free"]["5"] == true);
  CHECK(record["star_free"]["4"] == false);
  CHECK(record["connectivity"] == 2);

  json even = json::parse(analyze_graph_json(cycle_graph(6)));
  CHECK(even["near_pm"] == false);
  CHECK_FALSE(even.contains("near_pm_witness"));

  json near = json::parse(analyze_graph_json(cycle_graph(7)));
  CHECK(near["near_pm"] == true);
  CHECK(near["near_pm_witness"].is_null());
}
