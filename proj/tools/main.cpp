// command line front end: analyze | filter | verify | search | gen
//
// exit codes: 0 success, 1 a verify suite ran and found violations,
// 2 usage or input errors

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcrit/canonical.hpp"
#include "domcrit/constructions.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/enumerate.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/harness.hpp"
#include "domcrit/serialize.hpp"
#include "domcrit/version.hpp"

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("expected an integer for " + what + ", got: " + text);
  return value;
}

std::pair<int, int> parse_order_range(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = parse_int(text.substr(0, dots), "order range");
    int hi = parse_int(text.substr(dots + 2), "order range");
    return {lo, hi};
  }
  int n = parse_int(text, "order");
  return {n, n};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

std::vector<domcrit::Graph> gather_inputs(const std::vector<std::string>& items,
                                          const std::vector<std::string>& files) {
  std::vector<domcrit::Graph> graphs;
  auto take = [&graphs](domcrit::Corpus corpus) {
    for (domcrit::Graph& g : corpus.graphs) graphs.push_back(std::move(g));
  };
  bool used_stdin = false;
  for (const std::string& item : items) {
    if (item == "-") {
      if (!used_stdin) take(domcrit::load_corpus(std::cin, "stdin"));
      used_stdin = true;
      continue;
    }
    graphs.push_back(domcrit::parse_graph6(item));
  }
  for (const std::string& path : files) take(domcrit::load_corpus_file(path));
  if (items.empty() && files.empty()) take(domcrit::load_corpus(std::cin, "stdin"));
  return graphs;
}

domcrit::Corpus make_verify_corpus(const std::string& input, int sample,
                                   const std::string& orders_text, bool connected,
                                   bool assume_exhaustive, std::uint64_t seed) {
  auto [lo, hi] = parse_order_range(orders_text);
  if (!input.empty()) {
    domcrit::Corpus corpus = input == "-" ? domcrit::load_corpus(std::cin, "stdin")
                                          : domcrit::load_corpus_file(input);
    if (assume_exhaustive) {
      std::set<int> present;
      for (const domcrit::Graph& g : corpus.graphs) present.insert(g.n());
      corpus.exhaustive_orders.assign(present.begin(), present.end());
    }
    return corpus;
  }
  if (sample > 0) {
    std::vector<int> pool;
    for (int n = lo; n <= hi; ++n) pool.push_back(n);
    return domcrit::sampled_corpus(sample, pool, seed);
  }
  return domcrit::enumerate_corpus(lo, hi, connected);
}

using SuiteRunner =
    std::function<domcrit::CorpusReport(const domcrit::Corpus&, const domcrit::VerifyOptions&)>;

// resolves the suite token up front so a bad name fails before any corpus is built
SuiteRunner suite_runner(const std::string& token) {
  if (token == "2critical")
    return [](const auto& c, const auto& o) { return domcrit::verify_2critical(c, o); };
  if (token == "cut-lemma")
    return [](const auto& c, const auto& o) { return domcrit::verify_cut_lemma(c, o); };
  if (token == "3conn")
    return [](const auto& c, const auto& o) { return domcrit::verify_3connectivity(c, o); };
  if (token.rfind("matching:", 0) == 0) {
    std::string rest = token.substr(9);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      int k = parse_int(rest.substr(0, colon), "star size");
      std::string parity_text = rest.substr(colon + 1);
      domcrit::Parity parity;
      if (parity_text == "even") {
        parity = domcrit::Parity::Even;
      } else if (parity_text == "odd") {
        parity = domcrit::Parity::Odd;
      } else {
        throw std::invalid_argument(
            "matching suite wants matching:K:even or matching:K:odd, got: " + token);
      }
      // reject unsupported (k, parity) combinations before corpus work too
      domcrit::verify_theorem_matching(domcrit::Corpus{}, k, parity);
      return [k, parity](const auto& c, const auto& o) {
        return domcrit::verify_theorem_matching(c, k, parity, o);
      };
    }
    throw std::invalid_argument("matching suite wants matching:K:even or matching:K:odd, got: " +
                                token);
  }
  throw std::invalid_argument("unknown suite: " + token +
                              " (expected 2critical, matching:K:PARITY, cut-lemma, or 3conn)");
}

std::vector<domcrit::Graph> run_search(const std::string& token) {
  if (token == "case1.2") return domcrit::reconstruct_case_1_2();
  if (token == "case3.2:6") return domcrit::reconstruct_case_3_2(6);
  if (token == "case3.2:7") return domcrit::reconstruct_case_3_2(7);
  if (token == "case4.2") return domcrit::reconstruct_case_4_2();
  throw std::invalid_argument("unknown case: " + token +
                              " (expected case1.2, case3.2:6, case3.2:7, or case4.2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of domination-critical structure on small graphs"};
  app.set_version_flag("--version", std::string("domcrit ") + domcrit::kVersion);
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "emit one JSON record per input graph");
  std::vector<std::string> analyze_items, analyze_files;
  std::string analyze_out, analyze_facts = "choosable";
  analyze->add_option("graphs", analyze_items, "graph6 strings; - reads stdin as a corpus");
  analyze->add_option("-i,--input", analyze_files, "corpus file: one graph6 per line, # comments")
      ->allow_extra_args(false);
  analyze->add_option("-o,--output", analyze_out, "write to this file instead of stdout");
  analyze->add_option("--facts-mode", analyze_facts, "representative check: choosable or strict")
      ->check(CLI::IsMember({"choosable", "strict"}));

  auto* filter = app.add_subcommand("filter", "keep graphs satisfying every predicate");
  std::vector<std::string> filter_items, filter_files, filter_preds;
  std::string filter_out;
  filter->add_option("graphs", filter_items, "graph6 strings; - reads stdin as a corpus");
  filter->add_option("-i,--input", filter_files, "corpus file: one graph6 per line, # comments")
      ->allow_extra_args(false);
  filter->add_option("-p,--pred", filter_preds,
                     "predicate (repeatable): connected, vertex-critical, gamma=K, star-free=K, "
                     "parity=even|odd, c_o=T, min-degree=D, order=A..B")
      ->allow_extra_args(false);
  filter->add_option("-o,--output", filter_out, "write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run a certification suite over a corpus");
  std::string verify_suite, verify_input, verify_orders = "1..9";
  std::string verify_format = "json", verify_out;
  int verify_sample = 0, verify_workers = 1;
  std::uint64_t verify_seed = 1;
  bool verify_connected = false, verify_assume = false;
  verify->add_option("suite", verify_suite, "2critical | matching:K:PARITY | cut-lemma | 3conn")
      ->required();
  verify->add_option("--orders", verify_orders,
                     "order range A..B for enumerated or sampled corpora (default 1..9)");
  auto* verify_input_opt =
      verify->add_option("--input", verify_input, "corpus file, or - for stdin");
  auto* verify_sample_opt =
      verify->add_option("--sample", verify_sample, "use this many seeded random graphs instead")
          ->check(CLI::PositiveNumber);
  verify_input_opt->excludes(verify_sample_opt);
  verify_sample_opt->excludes(verify_input_opt);
  verify->add_flag("--connected", verify_connected, "enumerate connected graphs only");
  verify->add_flag("--assume-exhaustive", verify_assume,
                   "treat a file corpus as complete for the orders it contains");
  verify->add_option("--seed", verify_seed, "seed for sampled corpora (default 1)");
  verify->add_option("--workers", verify_workers, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("-o,--output", verify_out, "write the report to this file");

  auto* search = app.add_subcommand("search", "reconstruct an exceptional family by search");
  std::string search_case, search_format = "graph6", search_out;
  search->add_option("case", search_case, "case1.2 | case3.2:6 | case3.2:7 | case4.2")->required();
  search->add_option("--format", search_format, "graph6 (canonical lines) or json")
      ->check(CLI::IsMember({"graph6", "json"}));
  search->add_option("-o,--output", search_out, "write to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "emit named constructions or exhaustive enumerations");
  std::string gen_name, gen_out;
  std::vector<std::string> gen_params;
  bool gen_connected = false;
  gen->add_option("name", gen_name,
                  "enum | complete | cycle | path | star | cocktail_party | triple_isolated | "
                  "fig1_nine_vertex | disjoint_union | add_universal_vertex")
      ->required();
  gen->add_option("params", gen_params, "construction parameters");
  gen->add_flag("--connected", gen_connected, "enum only: connected graphs only");
  gen->add_option("-o,--output", gen_out, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ofstream out_file;
    if (app.got_subcommand(analyze)) {
      std::ostream& out = open_output(out_file, analyze_out);
      domcrit::FactsMode mode = analyze_facts == "strict" ? domcrit::FactsMode::Strict
                                                          : domcrit::FactsMode::Choosable;
      for (const domcrit::Graph& g : gather_inputs(analyze_items, analyze_files))
        out << domcrit::analyze_graph_json(g, mode) << "\n";
    } else if (app.got_subcommand(filter)) {
      std::ostream& out = open_output(out_file, filter_out);
      std::vector<domcrit::GraphPredicate> predicates;
      for (const std::string& text : filter_preds)
        predicates.push_back(domcrit::parse_predicate(text));
      for (const domcrit::Graph& g :
           domcrit::filter_corpus(gather_inputs(filter_items, filter_files), predicates))
        out << domcrit::to_graph6(g) << "\n";
    } else if (app.got_subcommand(verify)) {
      SuiteRunner runner = suite_runner(verify_suite);
      domcrit::Corpus corpus = make_verify_corpus(verify_input, verify_sample, verify_orders,
                                                  verify_connected, verify_assume, verify_seed);
      domcrit::VerifyOptions options;
      options.workers = verify_workers;
      domcrit::CorpusReport report = runner(corpus, options);
      std::ostream& out = open_output(out_file, verify_out);
      out << (verify_format == "csv" ? report.to_csv() : report.to_json());
      return report.pass ? 0 : 1;
    } else if (app.got_subcommand(search)) {
      std::vector<domcrit::Graph> found = run_search(search_case);
      std::ostream& out = open_output(out_file, search_out);
      if (search_format == "graph6") {
        for (const domcrit::Graph& g : found) out << domcrit::canonical_form(g) << "\n";
      } else {
        nlohmann::ordered_json j;
        j["tool"] = "domcrit";
        j["version"] = domcrit::kVersion;
        j["case"] = search_case;
        j["count"] = found.size();
        auto records = nlohmann::ordered_json::array();
        for (const domcrit::Graph& g : found)
          records.push_back(nlohmann::ordered_json::parse(domcrit::analyze_graph_json(g)));
        j["graphs"] = std::move(records);
        out << j.dump(2) << "\n";
      }
    } else if (app.got_subcommand(gen)) {
      std::ostream& out = open_output(out_file, gen_out);
      if (gen_name == "enum") {
        if (gen_params.size() != 1)
          throw std::invalid_argument("enum takes exactly one parameter: the order");
        int n = parse_int(gen_params[0], "enum order");
        for (const domcrit::Graph& g : domcrit::enumerate_graphs(n, gen_connected))
          out << domcrit::canonical_form(g) << "\n";
      } else {
        out << domcrit::to_graph6(domcrit::construct_named(gen_name, gen_params)) << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "domcrit: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
