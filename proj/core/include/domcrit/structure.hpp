#pragma once

#include <array>
#include <optional>
#include <vector>

#include "domcrit/domination.hpp"
#include "domcrit/graph.hpp"

namespace domcrit {

struct StarWitness {
  int center = -1;
  VertexSet leaves;  // pairwise non-adjacent neighbors of center
};

struct StarFreeResult {
  bool star_free = true;
  std::optional<StarWitness> witness;  // present iff star_free is false
};

// False iff some vertex has k pairwise non-adjacent neighbors (an induced
// star with k leaves); searched by exact independent-set expansion inside
// each neighborhood. k must be >= 2.
StarFreeResult is_star_free(const Graph& g, int k);

// Exact vertex connectivity: n-1 for complete graphs, 0 when disconnected,
// otherwise the minimum over non-adjacent pairs of the vertex-split max-flow.
int vertex_connectivity(const Graph& g);

// Structural check for graphs with domination number 3 that are
// vertex-critical (anything else throws):
//   clause 1 (disconnected inputs): the graph is three isolated vertices, or
//     the disjoint union of a 2-critical graph and one isolated vertex;
//   clause 2 (each cut vertex u): exactly two components after deleting u,
//     and each component plus u is 2-critical;
//   clause 3 (each 2-cut S): at most three components, and exactly three
//     forces one singleton.
// Clauses 2 and 3 are evaluated on connected inputs.
struct CutLemmaVerdict {
  bool pass = true;
  bool clause1_checked = false;
  bool clause1_pass = true;
  bool clause2_checked = false;
  bool clause2_pass = true;
  std::vector<int> clause2_bad_cuts;
  bool clause3_checked = false;
  bool clause3_pass = true;
  std::vector<VertexSet> clause3_bad_cuts;
};

CutLemmaVerdict cut_lemma_check(const Graph& g);

// Which reading of "every vertex of s has its candidate set inside s" the
// degree-one check uses: Some = at least one candidate per vertex lies in s,
// Every = all candidates do.
enum class DsetReading { Some, Every };

struct Degree1Verdict {
  bool hypothesis_met = false;
  bool pass = false;                  // meaningful only when hypothesis_met
  std::vector<int> degree1_vertices;  // members of s with degree exactly 1 inside s
};

// For vertex-critical graphs with domination number 3 (else throws): when
// every vertex of s has a candidate set inside s, the subgraph on s must
// have no vertex of degree one.
Degree1Verdict degree1_lemma_check(const Graph& g, VertexSet s, DsetReading reading = DsetReading::Some);

struct TriangleFreeReport {
  bool triangle_free = true;
  int edge_count = 0;
  int edge_bound = 0;  // floor(n^2 / 4), must dominate edge_count when triangle-free
  bool bound_ok = true;
  std::optional<std::array<int, 3>> triangle;
};

TriangleFreeReport triangle_free_report(const Graph& g);
bool is_triangle_free(const Graph& g);

}  // namespace domcrit
