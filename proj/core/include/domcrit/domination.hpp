#pragma once

#include <utility>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

struct DominationReport {
  int gamma = 0;
  VertexSet witness;  // one minimum dominating set (lexicographically found)
};

// true iff s together with its neighbors covers every vertex
bool is_dominating(const Graph& g, VertexSet s);

// Exact gamma by branch and bound on the uncovered set: branch on an
// uncovered vertex with the fewest closed-neighborhood candidates, seed the
// bound with a greedy cover, prune with ceil(|uncovered| / best coverage).
DominationReport domination_number(const Graph& g);
int domination_gamma(const Graph& g);

// true iff some dominating set of size <= k exists
bool has_dominating_set_within(const Graph& g, int k);

// every minimum dominating set, ascending by bitmask
std::vector<VertexSet> all_minimum_dominating_sets(const Graph& g);

// All dominating sets of G-v with cardinality gamma(G)-1, in g's original
// labels; empty when gamma(G-v) >= gamma(G). These are exactly the minimum
// dominating sets of G-v whenever deleting v lowers gamma.
std::vector<VertexSet> dv_sets(const Graph& g, int v);

// Fact 3 of the criticality certificate admits two readings; Choosable asks
// for a system of distinct representatives among the candidate families,
// Strict demands the families be pairwise disjoint.
enum class FactsMode { Choosable, Strict };

struct FactsReport {
  bool applicable = false;  // gamma == 3 and vertex-critical
  bool fact1 = true;        // every candidate set has size exactly 2
  bool fact2 = true;        // no candidate member is adjacent to the deleted vertex
  bool fact3 = true;        // candidates admit distinct representatives (or are disjoint)
  std::vector<int> fact1_bad;                      // vertices with a wrong-size candidate
  std::vector<std::pair<int, int>> fact2_bad;      // (vertex, offending candidate member)
  std::vector<std::pair<int, int>> fact3_bad;      // Strict: colliding vertex pair; Choosable: (vertex, -1) unmatched
  bool ok() const { return fact1 && fact2 && fact3; }
};

struct CriticalityCertificate {
  int gamma = 0;
  bool is_vertex_critical = false;
  std::vector<std::vector<VertexSet>> dv;  // dv[v] = candidate sets for vertex v
  std::vector<int> non_critical_vertices;  // v with gamma(G-v) == gamma(G)
  FactsReport facts;                       // applicable only when gamma == 3 and critical
};

CriticalityCertificate vertex_criticality(const Graph& g, FactsMode mode = FactsMode::Choosable);

// decision-only version (no candidate enumeration)
bool is_gamma_vertex_critical(const Graph& g);

// true iff adding any missing edge lowers gamma; vacuously true for complete graphs
bool is_gamma_edge_critical(const Graph& g);

// Auxiliary pair graph H on the vertices of s (ascending order): {u,v} is an
// edge iff some x in sources has {u,v} among dv_sets(g, x). Requires
// gamma(g) == 3.
Graph dv_pair_graph(const Graph& g, VertexSet s, VertexSet sources);

}  // namespace domcrit
