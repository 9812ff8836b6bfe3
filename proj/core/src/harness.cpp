#include "domcrit/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "domcrit/canonical.hpp"
#include "domcrit/constructions.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/enumerate.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/matching.hpp"
#include "domcrit/parallel.hpp"
#include "domcrit/rng.hpp"
#include "domcrit/serialize.hpp"
#include "domcrit/structure.hpp"
#include "domcrit/version.hpp"

namespace domcrit {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------- corpora

void strip_line(std::string& line) {
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
  if (start > 0) line.erase(0, start);
}

}  // namespace

Corpus enumerate_corpus(int min_order, int max_order, bool connected_only) {
  if (min_order < 1 || max_order > 9 || min_order > max_order)
    throw std::invalid_argument("enumerate_corpus: order range must sit inside 1..9");
  Corpus corpus;
  corpus.id = (connected_only ? "enumerate-connected:" : "enumerate:") +
              std::to_string(min_order) + ".." + std::to_string(max_order);
  auto levels = enumerate_levels(max_order, connected_only);
  for (int n = min_order; n <= max_order; ++n) {
    corpus.exhaustive_orders.push_back(n);
    for (Graph& g : levels[static_cast<std::size_t>(n - 1)]) corpus.graphs.push_back(std::move(g));
  }
  return corpus;
}

Corpus load_corpus(std::istream& in, std::string id) {
  Corpus corpus;
  corpus.id = std::move(id);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_line(line);
    if (line.empty() || line[0] == '#') continue;
    try {
      corpus.graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw std::runtime_error(corpus.id + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return corpus;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(in, path);
}

Corpus sampled_corpus(int count, const std::vector<int>& orders, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("sampled_corpus: count must be nonnegative");
  if (orders.empty()) throw std::invalid_argument("sampled_corpus: need at least one order");
  for (int n : orders)
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("sampled_corpus: order out of range");
  Corpus corpus;
  corpus.sampled = true;
  corpus.seed = seed;
  corpus.id = "sample:" + std::to_string(count) + "@" + std::to_string(seed);
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    int n = orders[static_cast<std::size_t>(rng.bounded(static_cast<int>(orders.size())))];
    double p = 0.1 + 0.8 * rng.unit();
    corpus.graphs.push_back(random_graph(n, p, rng));
  }
  return corpus;
}

// ------------------------------------------------------------- predicates

namespace {

int predicate_int(std::string_view text, const std::string& context) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("bad number in predicate: " + context);
  return value;
}

}  // namespace

GraphPredicate parse_predicate(const std::string& text) {
  std::string name = text;
  std::string value;
  bool has_value = false;
  if (auto eq = text.find('='); eq != std::string::npos) {
    name = text.substr(0, eq);
    value = text.substr(eq + 1);
    has_value = true;
  }
  auto need_value = [&] {
    if (!has_value || value.empty())
      throw std::invalid_argument("predicate needs a value: " + text);
  };
  auto reject_value = [&] {
    if (has_value) throw std::invalid_argument("predicate takes no value: " + text);
  };

  if (name == "connected") {
    reject_value();
    return [](const Graph& g) { return is_connected(g); };
  }
  if (name == "vertex-critical") {
    reject_value();
    return [](const Graph& g) { return is_gamma_vertex_critical(g); };
  }
  if (name == "gamma") {
    need_value();
    int k = predicate_int(value, text);
    return [k](const Graph& g) { return domination_gamma(g) == k; };
  }
  if (name == "star-free") {
    need_value();
    int k = predicate_int(value, text);
    if (k < 2) throw std::invalid_argument("star-free needs a leaf count of at least 2: " + text);
    return [k](const Graph& g) { return is_star_free(g, k).star_free; };
  }
  if (name == "parity") {
    need_value();
    if (value == "even") return [](const Graph& g) { return g.n() % 2 == 0; };
    if (value == "odd") return [](const Graph& g) { return g.n() % 2 == 1; };
    throw std::invalid_argument("parity must be even or odd: " + text);
  }
  if (name == "c_o") {
    need_value();
    int t = predicate_int(value, text);
    return [t](const Graph& g) { return components(g).odd_count == t; };
  }
  if (name == "min-degree") {
    need_value();
    int d = predicate_int(value, text);
    return [d](const Graph& g) { return g.n() > 0 && g.min_degree() >= d; };
  }
  if (name == "order") {
    need_value();
    int lo = 0, hi = kMaxVertices;
    if (auto dots = value.find(".."); dots != std::string::npos) {
      std::string a = value.substr(0, dots);
      std::string b = value.substr(dots + 2);
      if (a.empty() && b.empty())
        throw std::invalid_argument("order range needs at least one bound: " + text);
      if (!a.empty()) lo = predicate_int(a, text);
      if (!b.empty()) hi = predicate_int(b, text);
    } else {
      lo = hi = predicate_int(value, text);
    }
    return [lo, hi](const Graph& g) { return g.n() >= lo && g.n() <= hi; };
  }
  throw std::invalid_argument("unknown predicate: " + text);
}

std::vector<Graph> filter_corpus(const std::vector<Graph>& graphs,
                                 const std::vector<GraphPredicate>& predicates) {
  std::vector<Graph> out;
  for (const Graph& g : graphs) {
    bool keep = true;
    for (const GraphPredicate& pred : predicates)
      if (!pred(g)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(g);
  }
  return out;
}

// ----------------------------------------------------------- suite plumbing

namespace {

struct GraphOutcome {
  bool candidate = false;
  bool passed = false;
  bool exception = false;
  std::string canonical;  // filled for failures
  std::string reason;
  std::string certificate;
};

std::string corpus_mode(const Corpus& corpus) {
  if (corpus.sampled || corpus.exhaustive_orders.empty()) return "sampled";
  std::set<int> covered(corpus.exhaustive_orders.begin(), corpus.exhaustive_orders.end());
  for (const Graph& g : corpus.graphs)
    if (covered.find(g.n()) == covered.end()) return "sampled";
  return "exhaustive";
}

CorpusReport assemble_report(std::string suite, const Corpus& corpus,
                             std::vector<std::string> filters,
                             const std::vector<GraphOutcome>& outcomes) {
  CorpusReport report;
  report.suite = std::move(suite);
  report.corpus_id = corpus.id;
  report.mode = corpus_mode(corpus);
  report.filters = std::move(filters);
  report.seed = corpus.seed;
  std::map<int, OrderRow> rows;
  for (const Graph& g : corpus.graphs) rows[g.n()].order = g.n();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const GraphOutcome& o = outcomes[i];
    if (!o.candidate) continue;
    int order = corpus.graphs[i].n();
    OrderRow& row = rows[order];
    row.order = order;
    ++row.candidates;
    if (o.passed) {
      ++row.passed;
    } else if (o.exception) {
      ++row.exceptions;
      report.exceptions.push_back({order, o.canonical, o.reason, o.certificate});
    } else {
      ++row.violations;
      report.violations.push_back({order, o.canonical, o.reason, o.certificate});
    }
  }
  report.rows.reserve(rows.size());
  for (auto& [order, row] : rows) report.rows.push_back(row);
  report.pass = report.violations.empty();
  return report;
}

ordered_json entry_json(const ReportEntry& entry) {
  ordered_json j;
  j["order"] = entry.order;
  j["canonical"] = entry.canonical;
  j["reason"] = entry.reason;
  j["certificate"] =
      entry.certificate_json.empty() ? ordered_json() : ordered_json::parse(entry.certificate_json);
  return j;
}

const std::string& fig1_canonical() {
  static const std::string value = canonical_form(fig1_nine_vertex());
  return value;
}

const std::set<std::string>& case_4_2_canonicals() {
  static const std::set<std::string> value = [] {
    std::set<std::string> out;
    for (const Graph& g : reconstruct_case_4_2()) out.insert(canonical_form(g));
    return out;
  }();
  return value;
}

std::string matching_failure_certificate(const Graph& g, Parity parity) {
  ordered_json cert;
  cert["conclusion"] = parity == Parity::Even ? "perfect-matching" : "near-perfect-matching";
  if (parity == Parity::Even) {
    cert["witness"] = ordered_json::parse(to_json(tutte_witness(g)));
  } else {
    auto witness = near_pm_witness(g);
    cert["witness"] = witness ? ordered_json::parse(to_json(*witness)) : ordered_json();
  }
  try {
    cert["analysis"] = ordered_json::parse(to_json(minimal_witness_analysis(g)));
  } catch (const std::exception& e) {
    cert["analysis_error"] = e.what();
  }
  return cert.dump();
}

}  // namespace

std::string CorpusReport::to_json() const {
  ordered_json j;
  j["tool"] = "domcrit";
  j["version"] = kVersion;
  j["suite"] = suite;
  j["corpus"] = corpus_id;
  j["mode"] = mode;
  j["filters"] = filters;
  j["seed"] = seed;
  auto rows_json = ordered_json::array();
  for (const OrderRow& row : rows) {
    ordered_json r;
    r["order"] = row.order;
    r["candidates"] = row.candidates;
    r["passed"] = row.passed;
    r["violations"] = row.violations;
    r["exceptions"] = row.exceptions;
    rows_json.push_back(std::move(r));
  }
  j["orders"] = std::move(rows_json);
  auto violations_json = ordered_json::array();
  for (const ReportEntry& entry : violations) violations_json.push_back(entry_json(entry));
  j["violations"] = std::move(violations_json);
  auto exceptions_json = ordered_json::array();
  for (const ReportEntry& entry : exceptions) exceptions_json.push_back(entry_json(entry));
  j["exceptions"] = std::move(exceptions_json);
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

std::string CorpusReport::to_csv() const {
  std::string out = "order,candidates,passed,violations,exceptions\n";
  for (const OrderRow& row : rows) {
    out += std::to_string(row.order) + ',' + std::to_string(row.candidates) + ',' +
           std::to_string(row.passed) + ',' + std::to_string(row.violations) + ',' +
           std::to_string(row.exceptions) + '\n';
  }
  return out;
}

// ----------------------------------------------------------------- suites

CorpusReport verify_2critical(const Corpus& corpus, const VerifyOptions& options) {
  auto outcomes = parallel_map<GraphOutcome>(
      corpus.graphs, options.workers, [](const Graph& g) {
        GraphOutcome o;
        if (domination_gamma(g) != 2 || !is_gamma_vertex_critical(g)) return o;
        o.candidate = true;
        std::string canonical = canonical_form(g);
        if (g.n() % 2 == 0 && canonical == canonical_form(cocktail_party_graph(g.n() / 2))) {
          o.passed = true;
          return o;
        }
        o.canonical = std::move(canonical);
        o.reason = g.n() % 2 == 1 ? "odd-order" : "not-cocktail-party";
        o.certificate = to_json(vertex_criticality(g));
        return o;
      });
  CorpusReport report =
      assemble_report("2critical", corpus, {"gamma=2", "vertex-critical"}, outcomes);
  if (report.mode == "exhaustive") {
    // catalog completeness: each even order must produce its cocktail party graph
    for (int n : corpus.exhaustive_orders) {
      if (n % 2 != 0) continue;
      bool found = false;
      for (std::size_t i = 0; i < outcomes.size() && !found; ++i)
        found = outcomes[i].passed && corpus.graphs[i].n() == n;
      if (found) continue;
      std::string expected = canonical_form(cocktail_party_graph(n / 2));
      ordered_json cert;
      cert["expected_canonical"] = expected;
      cert["order"] = n;
      report.violations.push_back({n, expected, "missing-expected", cert.dump()});
      for (OrderRow& row : report.rows)
        if (row.order == n) {
          ++row.candidates;
          ++row.violations;
        }
    }
    report.pass = report.violations.empty();
  }
  return report;
}

CorpusReport verify_theorem_matching(const Corpus& corpus, int k, Parity parity,
                                     const VerifyOptions& options) {
  const bool odd = parity == Parity::Odd;
  const bool valid = (k == 5) || (k == 6 && !odd) || (k == 7 && odd);
  if (!valid)
    throw std::invalid_argument("unsupported combination: star size " + std::to_string(k) +
                                " with " + (odd ? "odd" : "even") + " parity");
  std::vector<std::string> filters = {"gamma=3", "vertex-critical",
                                      "star-free=" + std::to_string(k),
                                      std::string("parity=") + (odd ? "odd" : "even")};
  if (k == 5 && odd) filters.push_back("order=11..");
  if (k == 6) filters.push_back("order!=12");
  if (k == 7) {
    filters.push_back("c_o=1");
    filters.push_back("order!=13");
  }

  auto outcomes = parallel_map<GraphOutcome>(
      corpus.graphs, options.workers, [k, odd](const Graph& g) {
        GraphOutcome o;
        if (g.n() % 2 != (odd ? 1 : 0)) return o;
        if (k == 5 && odd && g.n() < 11) return o;
        if (k == 6 && g.n() == 12) return o;
        if (k == 7 && g.n() == 13) return o;
        if (k == 7 && components(g).odd_count != 1) return o;
        if (domination_gamma(g) != 3) return o;
        if (!is_gamma_vertex_critical(g)) return o;
        if (!is_star_free(g, k).star_free) return o;
        o.candidate = true;
        bool conclusion = odd ? has_near_perfect_matching(g) : has_perfect_matching(g);
        if (conclusion) {
          o.passed = true;
          return o;
        }
        o.canonical = canonical_form(g);
        bool known = false;
        if (k == 7 && odd) {
          if (g.n() == 9) known = o.canonical == fig1_canonical();
          else if (g.n() == 15) known = case_4_2_canonicals().count(o.canonical) > 0;
        }
        o.exception = known;
        o.reason = known ? "known-exception"
                         : (odd ? "no-near-perfect-matching" : "no-perfect-matching");
        o.certificate = matching_failure_certificate(g, odd ? Parity::Odd : Parity::Even);
        return o;
      });
  std::string suite = "matching:" + std::to_string(k) + ":" + (odd ? "odd" : "even");
  return assemble_report(std::move(suite), corpus, std::move(filters), outcomes);
}

CorpusReport verify_cut_lemma(const Corpus& corpus, const VerifyOptions& options) {
  auto outcomes = parallel_map<GraphOutcome>(
      corpus.graphs, options.workers, [](const Graph& g) {
        GraphOutcome o;
        if (domination_gamma(g) != 3) return o;
        CriticalityCertificate cert = vertex_criticality(g);
        if (!cert.is_vertex_critical) return o;
        o.candidate = true;
        CutLemmaVerdict verdict = cut_lemma_check(g);
        bool facts_ok = cert.facts.applicable && cert.facts.ok();
        if (verdict.pass && facts_ok) {
          o.passed = true;
          return o;
        }
        o.canonical = canonical_form(g);
        if (!facts_ok && !verdict.pass) o.reason = "facts+cut-structure";
        else if (!facts_ok) o.reason = "facts";
        else o.reason = "cut-structure";
        ordered_json c;
        c["criticality"] = ordered_json::parse(to_json(cert));
        c["cut"] = ordered_json::parse(to_json(verdict));
        o.certificate = c.dump();
        return o;
      });
  return assemble_report("cut-lemma", corpus, {"gamma=3", "vertex-critical"}, outcomes);
}

CorpusReport verify_3connectivity(const Corpus& corpus, const VerifyOptions& options) {
  auto outcomes = parallel_map<GraphOutcome>(
      corpus.graphs, options.workers, [](const Graph& g) {
        GraphOutcome o;
        if (g.n() % 2 != 0 || g.n() == 0 || g.min_degree() < 3) return o;
        if (domination_gamma(g) != 3) return o;
        if (!is_gamma_vertex_critical(g)) return o;
        o.candidate = true;
        int kappa = vertex_connectivity(g);
        if (kappa >= 3) {
          o.passed = true;
          return o;
        }
        o.canonical = canonical_form(g);
        o.reason = "connectivity<3";
        ordered_json cert;
        cert["connectivity"] = kappa;
        cert["min_degree"] = g.min_degree();
        o.certificate = cert.dump();
        return o;
      });
  return assemble_report("3conn", corpus,
                         {"gamma=3", "vertex-critical", "parity=even", "min-degree=3"}, outcomes);
}

// ------------------------------------------------------- witness analysis

WitnessAnalysis minimal_witness_analysis(const Graph& g) {
  if (domination_gamma(g) != 3 || !is_gamma_vertex_critical(g))
    throw std::invalid_argument(
        "witness analysis needs a vertex-critical graph with domination number 3");
  const int surplus = g.n() % 2 == 0 ? 2 : 3;
  DeficiencyWitness start = tutte_witness(g);
  if (start.summary.odd_count - start.s.count() < surplus)
    throw std::invalid_argument("matching conclusion holds; no witness to analyze");

  VertexSet s = start.s;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v : s) {
      VertexSet t = s;
      t.remove(v);
      ComponentSummary cs = components_after_deletion(g, t);
      if (cs.odd_count - t.count() >= surplus) {
        s = t;
        shrunk = true;
        break;
      }
    }
  }

  WitnessAnalysis out;
  out.s = s;
  out.surplus = surplus;
  out.summary = components_after_deletion(g, s);

  std::vector<VertexSet> odd_comps;
  for (const VertexSet& comp : out.summary.components) {
    if (comp.count() % 2 == 0) continue;
    odd_comps.push_back(comp);
    VertexSet attach;
    for (int v : s)
      if ((g.adjacency_bits(v) & comp.bits()) != 0) attach.add(v);
    out.attachments.push_back(attach);
  }

  out.d = kMaxVertices + 1;
  std::size_t first_min = 0;
  for (std::size_t i = 0; i < out.attachments.size(); ++i) {
    if (out.attachments[i].count() < out.d) {
      out.d = out.attachments[i].count();
      first_min = i;
    }
  }
  VertexSet c1 = odd_comps[first_min];
  VertexSet s1 = out.attachments[first_min];

  std::set<std::pair<int, int>> pairs;
  for (int x : g.vertices()) {
    if (c1.contains(x)) continue;
    for (const VertexSet& dset : dv_sets(g, x)) {
      if (dset.count() != 2 || !dset.is_subset_of(s) || !dset.intersects(s1)) continue;
      auto members = dset.to_vector();
      pairs.emplace(members[0], members[1]);
    }
  }
  out.normal_pairs.assign(pairs.begin(), pairs.end());

  long m = s.count();
  long rest = m - out.d;
  out.normal_bound = m * (m - 1) / 2 - rest * (rest - 1) / 2;

  out.claim1_ok = true;
  for (int v : s) {
    int touched = 0;
    for (const VertexSet& attach : out.attachments)
      if (attach.contains(v)) ++touched;
    if (touched < 3) {
      out.claim1_ok = false;
      break;
    }
  }
  return out;
}

std::string to_json(const WitnessAnalysis& analysis) {
  ordered_json j;
  j["s"] = analysis.s.to_vector();
  j["surplus"] = analysis.surplus;
  auto odd_json = ordered_json::array();
  auto even_json = ordered_json::array();
  for (const VertexSet& comp : analysis.summary.components) {
    if (comp.count() % 2 == 1) odd_json.push_back(comp.to_vector());
    else even_json.push_back(comp.to_vector());
  }
  j["odd_components"] = std::move(odd_json);
  j["even_components"] = std::move(even_json);
  auto attach_json = ordered_json::array();
  for (const VertexSet& attach : analysis.attachments) attach_json.push_back(attach.to_vector());
  j["attachments"] = std::move(attach_json);
  j["d"] = analysis.d;
  auto pairs_json = ordered_json::array();
  for (auto [a, b] : analysis.normal_pairs) pairs_json.push_back({a, b});
  j["normal_pairs"] = std::move(pairs_json);
  j["normal_bound"] = analysis.normal_bound;
  j["claim1_ok"] = analysis.claim1_ok;
  return j.dump();
}

// ---------------------------------------------------------- reconstruction

namespace {

bool pair_dominates_all_but(const Graph& g, int a, int b, int x) {
  VertexSet cover = g.closed_neighborhood(a) | g.closed_neighborhood(b);
  cover.add(x);
  return g.vertices().is_subset_of(cover);
}

std::vector<Graph> sorted_classes(std::map<std::string, Graph>& classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> reconstruct_case_1_2() {
  // S = {0,1,2} independent, six singleton outside vertices 3..8, each with
  // exactly two neighbors inside S; the deletion pair system couples them as
  // (3,4) through 0, (5,6) through 1, (7,8) through 2.
  const std::array<VertexSet, 3> pair_options = {
      VertexSet::single(1) | VertexSet::single(2),
      VertexSet::single(0) | VertexSet::single(2),
      VertexSet::single(0) | VertexSet::single(1),
  };
  std::map<std::string, Graph> classes;
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    Graph g(9);
    for (int i = 0; i < 6; ++i) {
      for (int v : pair_options[static_cast<std::size_t>(rest % 3)]) g.add_edge(3 + i, v);
      rest /= 3;
    }
    if (!pair_dominates_all_but(g, 0, 4, 3)) continue;
    if (!pair_dominates_all_but(g, 0, 3, 4)) continue;
    if (!pair_dominates_all_but(g, 1, 6, 5)) continue;
    if (!pair_dominates_all_but(g, 1, 5, 6)) continue;
    if (!pair_dominates_all_but(g, 2, 8, 7)) continue;
    if (!pair_dominates_all_but(g, 2, 7, 8)) continue;
    if (domination_gamma(g) != 3) continue;
    if (!is_gamma_vertex_critical(g)) continue;
    if (has_near_perfect_matching(g)) continue;
    classes.emplace(canonical_form(g), g);
  }
  return sorted_classes(classes);
}

std::vector<Graph> reconstruct_case_3_2(int k) {
  if (k != 6 && k != 7) throw std::invalid_argument("supported star sizes: 6 or 7");
  const int free_count = k - 1;  // outside vertices beyond the two hubs
  const int n = k + 6;
  std::map<std::string, Graph> classes;
  std::vector<int> masks(static_cast<std::size_t>(free_count), 0);

  auto test_candidate = [&] {
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    for (int hub : {5, 6})
      for (int v = 0; v < 4; ++v) g.add_edge(hub, v);
    for (int j = 0; j < free_count; ++j) {
      g.add_edge(7 + j, 4);
      for (int v = 0; v < 4; ++v)
        if ((masks[static_cast<std::size_t>(j)] >> v) & 1) g.add_edge(7 + j, v);
    }
    if (!is_star_free(g, k).star_free) return;
    if (domination_gamma(g) != 3) return;
    if (!is_gamma_vertex_critical(g)) return;
    if (k == 6 ? has_perfect_matching(g) : has_near_perfect_matching(g)) return;
    classes.emplace(canonical_form(g), g);
  };

  // attachment patterns to the 4-cycle, as a non-decreasing sequence
  auto descend = [&](auto&& self, int pos, int low) -> void {
    if (pos == free_count) {
      test_candidate();
      return;
    }
    for (int m = low; m < 16; ++m) {
      masks[static_cast<std::size_t>(pos)] = m;
      self(self, pos + 1, m);
    }
  };
  descend(descend, 0, 0);
  return sorted_classes(classes);
}

namespace {

// 3-regular graphs on six labelled vertices, one adjacency-mask array per
// isomorphism class
std::vector<std::array<std::uint32_t, 6>> cubic_six_skeletons() {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) slots.emplace_back(a, b);
  std::map<std::string, std::array<std::uint32_t, 6>> seen;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    if (std::popcount(mask) != 9) continue;
    std::array<std::uint32_t, 6> adj{};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      adj[static_cast<std::size_t>(slots[i].first)] |= 1u << slots[i].second;
      adj[static_cast<std::size_t>(slots[i].second)] |= 1u << slots[i].first;
    }
    bool cubic = true;
    for (int v = 0; v < 6 && cubic; ++v)
      cubic = std::popcount(adj[static_cast<std::size_t>(v)]) == 3;
    if (!cubic) continue;
    Graph g(6);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
    seen.emplace(canonical_form(g), adj);
  }
  std::vector<std::array<std::uint32_t, 6>> out;
  for (auto& [key, adj] : seen) out.push_back(adj);
  return out;
}

}  // namespace

std::vector<Graph> reconstruct_case_4_2() {
  // S of size six inducing a cubic graph; nine singleton outside vertices of
  // degree four; every pair inside S must be the deletion pair of exactly one
  // vertex, bijectively over all fifteen vertices.
  std::vector<std::uint32_t> row_masks;
  for (std::uint32_t m = 0; m < 64; ++m)
    if (std::popcount(m) == 4) row_masks.push_back(m);

  std::map<std::string, Graph> classes;
  const std::uint32_t full = (1u << 15) - 1;

  for (const auto& skeleton : cubic_six_skeletons()) {
    std::array<int, 9> rows{};

    auto leaf = [&](const std::array<std::uint32_t, 6>& cover, const std::array<int, 6>& counts) {
      for (int v = 0; v < 6; ++v)
        if (counts[static_cast<std::size_t>(v)] != 6) return;
      std::uint32_t seen_missed = 0;
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          std::uint32_t miss =
              full & ~(cover[static_cast<std::size_t>(a)] | cover[static_cast<std::size_t>(b)]);
          if (std::popcount(miss) != 1) return;
          if (seen_missed & miss) return;
          seen_missed |= miss;
        }
      Graph g(15);
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
          if ((skeleton[static_cast<std::size_t>(a)] >> b) & 1) g.add_edge(a, b);
      for (int i = 0; i < 9; ++i)
        for (int v = 0; v < 6; ++v)
          if ((row_masks[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])] >> v) & 1)
            g.add_edge(6 + i, v);
      if (domination_gamma(g) != 3) return;
      if (!is_gamma_vertex_critical(g)) return;
      if (!is_star_free(g, 7).star_free) return;
      if (has_near_perfect_matching(g)) return;
      classes.emplace(canonical_form(g), g);
    };

    auto descend = [&](auto&& self, int depth, int low, std::array<std::uint32_t, 6> cover,
                       std::array<int, 6> counts) -> void {
      if (depth == 9) {
        leaf(cover, counts);
        return;
      }
      for (int r = low; r < static_cast<int>(row_masks.size()); ++r) {
        rows[static_cast<std::size_t>(depth)] = r;
        auto next_cover = cover;
        auto next_counts = counts;
        bool overfull = false;
        for (int v = 0; v < 6; ++v) {
          if ((row_masks[static_cast<std::size_t>(r)] >> v) & 1) {
            next_cover[static_cast<std::size_t>(v)] |= 1u << (6 + depth);
            if (++next_counts[static_cast<std::size_t>(v)] > 6) overfull = true;
          }
        }
        if (overfull) continue;
        self(self, depth + 1, r, next_cover, next_counts);
      }
    };

    std::array<std::uint32_t, 6> base_cover{};
    for (int v = 0; v < 6; ++v)
      base_cover[static_cast<std::size_t>(v)] = skeleton[static_cast<std::size_t>(v)] | (1u << v);
    descend(descend, 0, 0, base_cover, std::array<int, 6>{});
  }
  return sorted_classes(classes);
}

}  // namespace domcrit
