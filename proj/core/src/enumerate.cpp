#include "domcrit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "domcrit/canonical.hpp"

namespace domcrit {

namespace {

Graph extend(const Graph& parent, std::uint64_t nbrs) {
  Graph child(parent.n() + 1);
  for (auto [u, v] : parent.edges()) child.add_edge(u, v);
  int w = parent.n();
  for (int u = 0; u < parent.n(); ++u) {
    if ((nbrs >> u) & 1) child.add_edge(u, w);
  }
  return child;
}

Graph delete_vertex(const Graph& g, int v) {
  VertexSet keep = g.vertices();
  keep.remove(v);
  return induced_subgraph(g, keep);
}

// child is accepted from this parent iff no single-vertex deletion yields a
// graph canonically smaller than the parent. Deleting the freshly added
// vertex recovers the parent itself, so every class is reachable from its
// minimum-canonical-form parent and from no other.
bool canonical_parent(const Graph& child, const std::string& parent_canon, bool connected_only) {
  for (int u = 0; u < child.n(); ++u) {
    if (connected_only && !is_connected_after_deletion(child, VertexSet::single(u))) continue;
    if (canonical_form(delete_vertex(child, u)) < parent_canon) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Graph>> enumerate_levels(int max_n, bool connected_only) {
  if (max_n < 1 || max_n > 9) {
    throw std::invalid_argument("enumerate_levels: order must be in [1, 9]");
  }
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph(1)});
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& parent : levels.back()) {
      std::string parent_canon = canonical_form(parent);
      std::map<std::string, Graph> children;
      std::uint64_t subsets = std::uint64_t{1} << parent.n();
      for (std::uint64_t nbrs = connected_only ? 1 : 0; nbrs < subsets; ++nbrs) {
        Graph child = extend(parent, nbrs);
        std::string canon = canonical_form(child);
        if (next.count(canon) || children.count(canon)) continue;
        children.emplace(std::move(canon), std::move(child));
      }
      for (auto& [canon, child] : children) {
        if (canonical_parent(child, parent_canon, connected_only)) {
          next.emplace(canon, std::move(child));
        }
      }
    }
    std::vector<Graph> level;
    level.reserve(next.size());
    for (auto& [canon, g] : next) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  return enumerate_levels(n, connected_only).back();
}

}  // namespace domcrit
