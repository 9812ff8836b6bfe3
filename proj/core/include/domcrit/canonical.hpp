#pragma once

#include <string>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

/// Canonical graph6 string: the lexicographically smallest graph6 encoding
/// over all relabellings. Equal strings iff isomorphic. Computed by iterated
/// neighborhood-count refinement plus backtracking over individualizations,
/// pruned by discovered automorphisms.
std::string canonical_form(const Graph& g);

/// A labelling that realizes canonical_form(g): image[v] is the canonical
/// position of vertex v, so to_graph6(apply_relabelling(g, image)) equals
/// canonical_form(g).
std::vector<int> canonical_labelling(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace domcrit
