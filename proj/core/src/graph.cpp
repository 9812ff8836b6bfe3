#include "domcrit/graph.hpp"

#include <stdexcept>
#include <string>

namespace domcrit {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count out of range [0,64]: " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " outside [0," +
                            std::to_string(n_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet(adj_[static_cast<std::size_t>(v)]);
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(adj_[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[static_cast<std::size_t>(v)]));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    for (std::uint64_t m = higher; m; m &= m - 1) {
      out.emplace_back(u, std::countr_zero(m));
    }
  }
  return out;
}

ComponentSummary components_after_deletion(const Graph& g, VertexSet deleted) {
  ComponentSummary out;
  VertexSet rest = g.vertices() - deleted;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    for (;;) {
      VertexSet frontier;
      for (int v : comp) frontier |= g.neighbors(v);
      frontier = (frontier & rest) - comp;
      if (frontier.empty()) break;
      comp |= frontier;
    }
    out.components.push_back(comp);
    (comp.count() % 2 ? out.odd_count : out.even_count)++;
    rest -= comp;
  }
  out.total = static_cast<int>(out.components.size());
  return out;
}

ComponentSummary components(const Graph& g) { return components_after_deletion(g, VertexSet()); }

bool is_connected(const Graph& g) { return components(g).total <= 1; }

bool is_connected_after_deletion(const Graph& g, VertexSet deleted) {
  return components_after_deletion(g, deleted).total <= 1;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> old_of_new = keep.to_vector();
  Graph out(static_cast<int>(old_of_new.size()));
  for (int i = 0; i < out.n(); ++i) {
    for (int j = i + 1; j < out.n(); ++j) {
      if (g.has_edge(old_of_new[static_cast<std::size_t>(i)], old_of_new[static_cast<std::size_t>(j)])) {
        out.add_edge(i, j);
      }
    }
  }
  return out;
}

bool is_independent_set(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

Graph apply_relabelling(const Graph& g, const std::vector<int>& image) {
  Graph out(g.n());
  for (auto [u, v] : g.edges()) {
    out.add_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace domcrit
