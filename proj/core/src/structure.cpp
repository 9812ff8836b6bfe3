#include "domcrit/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace domcrit {

namespace {

// Greedy-complete exact search: does "candidates" contain an independent set
// of size k? Fills "out" with the lexicographically first one found.
bool find_independent(const Graph& g, std::uint64_t candidates, int k, std::uint64_t chosen, std::uint64_t& out) {
  if (k == 0) {
    out = chosen;
    return true;
  }
  if (std::popcount(candidates) < k) return false;
  int v = std::countr_zero(candidates);
  std::uint64_t bit = std::uint64_t{1} << v;
  if (find_independent(g, candidates & ~bit & ~g.adjacency_bits(v), k - 1, chosen | bit, out)) return true;
  return find_independent(g, candidates & ~bit, k, chosen, out);
}

bool is_2_critical(const Graph& g) {
  return domination_number(g).gamma == 2 && is_gamma_vertex_critical(g);
}

// unit-capacity max flow on the vertex-split network, enough for
// connectivity at this scale
struct FlowNetwork {
  int nodes;
  std::vector<std::vector<int>> cap;

  explicit FlowNetwork(int node_count) : nodes(node_count), cap(static_cast<std::size_t>(node_count), std::vector<int>(static_cast<std::size_t>(node_count), 0)) {}

  int max_flow(int source, int sink) {
    int total = 0;
    for (;;) {
      std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
      prev[static_cast<std::size_t>(source)] = source;
      std::vector<int> queue{source};
      for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(sink)] == -1; ++qi) {
        int v = queue[qi];
        for (int to = 0; to < nodes; ++to) {
          if (prev[static_cast<std::size_t>(to)] == -1 && cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(to)] > 0) {
            prev[static_cast<std::size_t>(to)] = v;
            queue.push_back(to);
          }
        }
      }
      if (prev[static_cast<std::size_t>(sink)] == -1) return total;
      for (int v = sink; v != source; v = prev[static_cast<std::size_t>(v)]) {
        int u = prev[static_cast<std::size_t>(v)];
        --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      }
      ++total;
    }
  }
};

// number of internally disjoint paths between non-adjacent s and t
int local_connectivity(const Graph& g, int s, int t) {
  int n = g.n();
  const int kInf = 1 << 20;
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) {
    net.cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? kInf : 1;
  }
  for (auto [u, v] : g.edges()) {
    net.cap[static_cast<std::size_t>(2 * u + 1)][static_cast<std::size_t>(2 * v)] = kInf;
    net.cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * u)] = kInf;
  }
  return net.max_flow(2 * s + 1, 2 * t);
}

}  // namespace

StarFreeResult is_star_free(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("is_star_free: k must be at least 2");
  StarFreeResult result;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) < k) continue;
    std::uint64_t leaves = 0;
    if (find_independent(g, g.adjacency_bits(v), k, 0, leaves)) {
      result.star_free = false;
      result.witness = StarWitness{v, VertexSet(leaves)};
      return result;
    }
  }
  return result;
}

int vertex_connectivity(const Graph& g) {
  int n = g.n();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  bool complete = true;
  for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
  if (complete) return n - 1;
  int best = n;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

CutLemmaVerdict cut_lemma_check(const Graph& g) {
  if (domination_number(g).gamma != 3 || !is_gamma_vertex_critical(g)) {
    throw std::invalid_argument("cut_lemma_check: graph must be vertex-critical with domination number 3");
  }
  CutLemmaVerdict verdict;
  if (!is_connected(g)) {
    verdict.clause1_checked = true;
    ComponentSummary parts = components(g);
    bool all_singletons = parts.total == g.n() && g.n() == 3;
    bool union_form = false;
    if (parts.total == 2) {
      const VertexSet& first = parts.components[0];
      const VertexSet& second = parts.components[1];
      if (first.count() == 1 && second.count() > 1) {
        union_form = is_2_critical(induced_subgraph(g, second));
      } else if (second.count() == 1 && first.count() > 1) {
        union_form = is_2_critical(induced_subgraph(g, first));
      }
    }
    verdict.clause1_pass = all_singletons || union_form;
    verdict.pass = verdict.clause1_pass;
    return verdict;
  }

  for (int u = 0; u < g.n(); ++u) {
    VertexSet cut = VertexSet::single(u);
    ComponentSummary parts = components_after_deletion(g, cut);
    if (parts.total < 2) continue;
    verdict.clause2_checked = true;
    bool ok = parts.total == 2;
    if (ok) {
      for (const VertexSet& comp : parts.components) {
        VertexSet with_cut = comp;
        with_cut.add(u);
        if (!is_2_critical(induced_subgraph(g, with_cut))) ok = false;
      }
    }
    if (!ok) {
      verdict.clause2_pass = false;
      verdict.clause2_bad_cuts.push_back(u);
    }
  }

  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      VertexSet cut;
      cut.add(a);
      cut.add(b);
      ComponentSummary parts = components_after_deletion(g, cut);
      if (parts.total < 2) continue;
      verdict.clause3_checked = true;
      bool ok = parts.total <= 3;
      if (ok && parts.total == 3) {
        ok = std::any_of(parts.components.begin(), parts.components.end(),
                         [](const VertexSet& comp) { return comp.count() == 1; });
      }
      if (!ok) {
        verdict.clause3_pass = false;
        verdict.clause3_bad_cuts.push_back(cut);
      }
    }
  }

  verdict.pass = verdict.clause1_pass && verdict.clause2_pass && verdict.clause3_pass;
  return verdict;
}

Degree1Verdict degree1_lemma_check(const Graph& g, VertexSet s, DsetReading reading) {
  if (domination_number(g).gamma != 3 || !is_gamma_vertex_critical(g)) {
    throw std::invalid_argument("degree1_lemma_check: graph must be vertex-critical with domination number 3");
  }
  Degree1Verdict verdict;
  verdict.hypothesis_met = true;
  for (int u : s) {
    std::vector<VertexSet> candidates = dv_sets(g, u);
    bool inside;
    if (reading == DsetReading::Some) {
      inside = std::any_of(candidates.begin(), candidates.end(),
                           [&](const VertexSet& d) { return d.is_subset_of(s); });
    } else {
      inside = !candidates.empty() &&
               std::all_of(candidates.begin(), candidates.end(),
                           [&](const VertexSet& d) { return d.is_subset_of(s); });
    }
    if (!inside) {
      verdict.hypothesis_met = false;
      return verdict;
    }
  }
  for (int u : s) {
    if (std::popcount(g.adjacency_bits(u) & s.bits()) == 1) verdict.degree1_vertices.push_back(u);
  }
  verdict.pass = verdict.degree1_vertices.empty();
  return verdict;
}

TriangleFreeReport triangle_free_report(const Graph& g) {
  TriangleFreeReport report;
  report.edge_count = g.edge_count();
  report.edge_bound = g.n() * g.n() / 4;
  for (auto [u, v] : g.edges()) {
    std::uint64_t common = g.adjacency_bits(u) & g.adjacency_bits(v);
    if (common) {
      report.triangle_free = false;
      report.triangle = {u, v, std::countr_zero(common)};
      return report;
    }
  }
  report.bound_ok = report.edge_count <= report.edge_bound;
  return report;
}

bool is_triangle_free(const Graph& g) { return triangle_free_report(g).triangle_free; }

}  // namespace domcrit
