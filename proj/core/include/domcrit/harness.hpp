#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

struct Corpus {
  std::string id;
  std::vector<Graph> graphs;
  std::vector<int> exhaustive_orders;  // orders the corpus covers completely
  bool sampled = false;
  std::uint64_t seed = 0;
};

// one representative per isomorphism class for every order in [min_order, max_order]
Corpus enumerate_corpus(int min_order, int max_order, bool connected_only = false);

// graph6 lines; '#' starts a comment line; blank lines ignored. Parse
// failures carry the 1-based line number.
Corpus load_corpus(std::istream& in, std::string id);
Corpus load_corpus_file(const std::string& path);

// count random graphs; orders drawn uniformly from the given list, edge
// probability from [0.1, 0.9); item i uses a stream derived from (seed, i)
Corpus sampled_corpus(int count, const std::vector<int>& orders, std::uint64_t seed);

using GraphPredicate = std::function<bool(const Graph&)>;

// Registered forms: connected | vertex-critical | gamma=K | star-free=K |
// parity=even|odd | c_o=T | min-degree=D | order=A or order=A..B.
// Unknown names throw.
GraphPredicate parse_predicate(const std::string& text);

std::vector<Graph> filter_corpus(const std::vector<Graph>& graphs,
                                 const std::vector<GraphPredicate>& predicates);

struct OrderRow {
  int order = 0;
  long candidates = 0;
  long passed = 0;
  long violations = 0;
  long exceptions = 0;
};

struct ReportEntry {
  int order = 0;
  std::string canonical;         // canonical graph6 of the graph concerned
  std::string reason;
  std::string certificate_json;  // re-verifiable evidence
};

struct CorpusReport {
  std::string suite;
  std::string corpus_id;
  std::string mode;  // "exhaustive" or "sampled"
  std::vector<std::string> filters;
  std::uint64_t seed = 0;
  std::vector<OrderRow> rows;            // ascending by order
  std::vector<ReportEntry> violations;   // conclusion failures
  std::vector<ReportEntry> exceptions;   // failures matching the expected exception set
  bool pass = true;                      // no violations (exceptions allowed)

  std::string to_json() const;  // embeds tool name and version
  std::string to_csv() const;   // header: order,candidates,passed,violations,exceptions
};

struct VerifyOptions {
  int workers = 1;
};

enum class Parity { Even, Odd };

// Catalog check: the 2-critical graphs of each exhaustively covered order
// are exactly one per even order (the half-order cocktail party) and none
// per odd order. Non-exhaustive corpora downgrade to membership checking.
CorpusReport verify_2critical(const Corpus& corpus, const VerifyOptions& options = {});

// Matching conclusions over critical graphs with domination number 3.
// Valid (k, parity): (5, Even), (5, Odd), (6, Even), (7, Odd).
// Even asserts a perfect matching, odd a near-perfect matching; the known
// exception catalog applies to k=7 odd.
CorpusReport verify_theorem_matching(const Corpus& corpus, int k, Parity parity,
                                     const VerifyOptions& options = {});

// Cut-structure clauses plus the Facts certification over every
// vertex-critical graph with domination number 3 in the corpus.
CorpusReport verify_cut_lemma(const Corpus& corpus, const VerifyOptions& options = {});

// Connectivity >= 3 over even-order vertex-critical graphs with domination
// number 3 and minimum degree >= 3.
CorpusReport verify_3connectivity(const Corpus& corpus, const VerifyOptions& options = {});

struct WitnessAnalysis {
  VertexSet s;               // inclusion-minimal set with the required surplus
  ComponentSummary summary;  // components of G - s
  std::vector<VertexSet> attachments;  // per odd component: s-vertices with a neighbor inside
  int d = 0;                           // smallest attachment size
  int surplus = 0;                     // required c_o(G-s) - |s| (2 for even order, 3 for odd)
  std::vector<std::pair<int, int>> normal_pairs;  // realized 2-subsets of s meeting the first minimum attachment
  long normal_bound = 0;  // C(|s|,2) - C(|s|-d,2)
  bool claim1_ok = false;  // every s-vertex adjacent to >= 3 odd components
};

// For vertex-critical graphs with domination number 3 that fail the matching
// conclusion for their parity; throws otherwise.
WitnessAnalysis minimal_witness_analysis(const Graph& g);
std::string to_json(const WitnessAnalysis& analysis);

// Constraint searches over the structures the case analysis pins down; each
// returns one representative per isomorphism class, ascending by canonical
// form.
std::vector<Graph> reconstruct_case_1_2();
std::vector<Graph> reconstruct_case_3_2(int k);  // k = 6 (order 12) or 7 (order 13)
std::vector<Graph> reconstruct_case_4_2();

}  // namespace domcrit
