#include "domcrit/serialize.hpp"

#include <json.hpp>

#include "domcrit/canonical.hpp"
#include "domcrit/graph6.hpp"

namespace domcrit {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json set_json(const VertexSet& s) { return ordered_json(s.to_vector()); }

ordered_json sets_json(const std::vector<VertexSet>& sets) {
  ordered_json arr = ordered_json::array();
  for (const VertexSet& s : sets) arr.push_back(set_json(s));
  return arr;
}

ordered_json facts_json(const FactsReport& facts) {
  if (!facts.applicable) return nullptr;
  ordered_json j;
  j["f1"] = facts.fact1;
  j["f2"] = facts.fact2;
  j["f3"] = facts.fact3;
  ordered_json counter = ordered_json::array();
  for (int v : facts.fact1_bad) counter.push_back({{"fact", 1}, {"vertex", v}});
  for (auto [v, x] : facts.fact2_bad) counter.push_back({{"fact", 2}, {"vertex", v}, {"member", x}});
  for (auto [v, w] : facts.fact3_bad) {
    if (w < 0) {
      counter.push_back({{"fact", 3}, {"vertex", v}});
    } else {
      counter.push_back({{"fact", 3}, {"vertex", v}, {"other", w}});
    }
  }
  j["counterexamples"] = counter;
  return j;
}

ordered_json criticality_json(const CriticalityCertificate& cert) {
  ordered_json j;
  j["gamma"] = cert.gamma;
  j["is_vertex_critical"] = cert.is_vertex_critical;
  ordered_json dv;
  for (std::size_t v = 0; v < cert.dv.size(); ++v) {
    dv[std::to_string(v)] = sets_json(cert.dv[v]);
  }
  j["dv"] = std::move(dv);
  j["facts"] = facts_json(cert.facts);
  return j;
}

ordered_json witness_json(const DeficiencyWitness& witness) {
  ordered_json j;
  j["s"] = set_json(witness.s);
  ordered_json odd = ordered_json::array();
  for (const VertexSet& comp : witness.summary.components) {
    if (comp.count() % 2 == 1) odd.push_back(set_json(comp));
  }
  j["odd_components"] = odd;
  j["deficit"] = witness.deficit;
  return j;
}

ordered_json matching_json(const MatchingReport& report) {
  ordered_json j;
  j["nu"] = report.nu;
  j["deficiency"] = report.deficiency;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : report.matching.edges) edges.push_back({u, v});
  j["matching"] = edges;
  j["gallai_edmonds"] = {
      {"d", set_json(report.ge.d)}, {"a", set_json(report.ge.a)}, {"c", set_json(report.ge.c)}};
  return j;
}

ordered_json cut_lemma_json(const CutLemmaVerdict& verdict) {
  ordered_json j;
  j["pass"] = verdict.pass;
  j["clause1"] = {{"checked", verdict.clause1_checked}, {"pass", verdict.clause1_pass}};
  ordered_json bad2 = ordered_json::array();
  for (int u : verdict.clause2_bad_cuts) bad2.push_back(u);
  j["clause2"] = {{"checked", verdict.clause2_checked}, {"pass", verdict.clause2_pass}, {"bad_cuts", bad2}};
  ordered_json bad3 = ordered_json::array();
  for (const VertexSet& s : verdict.clause3_bad_cuts) bad3.push_back(set_json(s));
  j["clause3"] = {{"checked", verdict.clause3_checked}, {"pass", verdict.clause3_pass}, {"bad_cuts", bad3}};
  return j;
}

ordered_json degree1_json(const Degree1Verdict& verdict) {
  ordered_json j;
  j["hypothesis_met"] = verdict.hypothesis_met;
  j["pass"] = verdict.pass;
  j["degree1_vertices"] = ordered_json(verdict.degree1_vertices);
  return j;
}

}  // namespace

std::string to_json(const CriticalityCertificate& cert) { return criticality_json(cert).dump(); }
std::string to_json(const DeficiencyWitness& witness) { return witness_json(witness).dump(); }
std::string to_json(const MatchingReport& report) { return matching_json(report).dump(); }
std::string to_json(const CutLemmaVerdict& verdict) { return cut_lemma_json(verdict).dump(); }
std::string to_json(const Degree1Verdict& verdict) { return degree1_json(verdict).dump(); }

std::string analyze_graph_json(const Graph& g, FactsMode mode) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["canonical"] = canonical_form(g);
  j["order"] = g.n();
  j["edge_count"] = g.edge_count();
  j["min_degree"] = g.min_degree();

  CriticalityCertificate cert = vertex_criticality(g, mode);
  j["gamma"] = cert.gamma;
  j["vertex_critical"] = cert.is_vertex_critical;
  j["edge_critical"] = is_gamma_edge_critical(g);
  j["criticality"] = criticality_json(cert);

  MatchingReport matching = maximum_matching(g);
  j["nu"] = matching.nu;
  j["deficiency"] = matching.deficiency;
  j["perfect_matching"] = matching.deficiency == 0;
  j["near_pm"] = g.n() % 2 == 1 && matching.deficiency == 1;
  j["factor_critical"] = is_factor_critical(g);
  j["bicritical"] = is_bicritical(g);
  j["matching"] = matching_json(matching);
  j["tutte_witness"] = witness_json(tutte_witness(g));
  if (g.n() % 2 == 1) {
    auto witness = near_pm_witness(g);
    j["near_pm_witness"] = witness ? witness_json(*witness) : ordered_json(nullptr);
  }

  ordered_json star;
  for (int k = 3; k <= 8; ++k) {
    star[std::to_string(k)] = is_star_free(g, k).star_free;
  }
  j["star_free"] = std::move(star);
  j["connectivity"] = vertex_connectivity(g);
  j["triangle_free"] = is_triangle_free(g);
  return j.dump();
}

}  // namespace domcrit
