#pragma once

#include <span>
#include <string>
#include <string_view>

#include "domcrit/graph.hpp"

namespace domcrit {

Graph complete_graph(int n);          // K_n, n >= 1
Graph cycle_graph(int n);             // C_n, n >= 3
Graph path_graph(int n);              // P_n, n >= 1
Graph star_graph(int k);              // K_{1,k}: center 0, leaves 1..k
Graph cocktail_party_graph(int m);    // K_{2m} minus the perfect matching {2i, 2i+1}
Graph triple_isolated();              // three isolated vertices

/// Nine vertices: an independent triple {0,1,2} and six independent vertices
/// 3..8 attached in pairs to the three 2-subsets of the triple. The smallest
/// 3-domination-vertex-critical graph with no near-perfect matching.
Graph fig1_nine_vertex();

Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_universal_vertex(const Graph& g);

/// Dispatch by name with string parameters; integer parameters are decimal,
/// graph parameters (disjoint_union, add_universal_vertex) are graph6 tokens.
/// Throws std::invalid_argument for unknown names or out-of-range parameters.
Graph construct_named(std::string_view name, std::span<const std::string> params);

}  // namespace domcrit
