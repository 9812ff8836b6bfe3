#pragma once

#include <string>

#include "domcrit/domination.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/matching.hpp"
#include "domcrit/structure.hpp"

namespace domcrit {

// Compact (single-line) JSON renderings. Kept as plain strings so the public
// headers stay free of the JSON library.
std::string to_json(const CriticalityCertificate& cert);
std::string to_json(const DeficiencyWitness& witness);
std::string to_json(const MatchingReport& report);
std::string to_json(const CutLemmaVerdict& verdict);
std::string to_json(const Degree1Verdict& verdict);

// Full certificate bundle for one graph: domination, criticality and facts,
// matching and decomposition, deficiency witnesses, star-freedom for leaf
// counts 3..8, connectivity, triangle-freedom. One line of JSON.
std::string analyze_graph_json(const Graph& g, FactsMode mode = FactsMode::Choosable);

}  // namespace domcrit
