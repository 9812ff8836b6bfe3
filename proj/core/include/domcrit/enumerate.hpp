#pragma once

#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// All isomorphism classes of simple graphs of the given order, one
// representative each, sorted by canonical graph6 string. connected_only
// restricts to connected graphs. Orders outside [1, 9] throw
// std::invalid_argument; the generation scheme is exact but not sized for
// larger orders.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

// Levels 1..max_n in one pass (level k at index k-1). Cheaper than calling
// enumerate_graphs per order because parents are reused.
std::vector<std::vector<Graph>> enumerate_levels(int max_n, bool connected_only = false);

}  // namespace domcrit
