#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // ascending lexicographic, u < v
};

// D: vertices missed by some maximum matching, A: their outside neighbors,
// C: the rest. Components of the subgraph on D are factor-critical, the
// subgraph on C has a perfect matching, and
// deficiency = (#components of D) - |A|.
struct GallaiEdmonds {
  VertexSet d, a, c;
};

struct MatchingReport {
  int nu = 0;
  int deficiency = 0;  // n - 2 nu
  Matching matching;
  GallaiEdmonds ge;
};

// Exact maximum matching by augmenting-path search with blossom contraction;
// the decomposition is read off the final search forests.
MatchingReport maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);
// false for even order by convention (total predicate for corpus filters)
bool has_near_perfect_matching(const Graph& g);
bool is_factor_critical(const Graph& g);
bool is_bicritical(const Graph& g);

struct DeficiencyWitness {
  VertexSet s;
  ComponentSummary summary;  // components of G - s
  int deficit = 0;           // c_o(G - s) - |s|
};

// S = A(G) from the decomposition; attains the maximum of c_o(G-S) - |S|,
// which equals the deficiency.
DeficiencyWitness tutte_witness(const Graph& g);

// For odd order only (even order throws). Implements the universal-vertex
// construction: absent iff a near-perfect matching exists; otherwise the
// returned S satisfies c_o(G-S) >= |S| + 3.
std::optional<DeficiencyWitness> near_pm_witness(const Graph& g);

}  // namespace domcrit
