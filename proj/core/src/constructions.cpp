#include "domcrit/constructions.hpp"

#include <charconv>
#include <stdexcept>

#include "domcrit/graph6.hpp"

namespace domcrit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int parse_int(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected an integer parameter, got '" + s + "'");
  }
  return value;
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "complete: n must be in [1,64]");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle: n must be in [3,64]");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "path: n must be in [1,64]");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int k) {
  require(k >= 1 && k + 1 <= kMaxVertices, "star: k must be in [1,63]");
  Graph g(k + 1);
  for (int leaf = 1; leaf <= k; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph cocktail_party_graph(int m) {
  require(m >= 1 && 2 * m <= kMaxVertices, "cocktail_party: m must be in [1,32]");
  Graph g(2 * m);
  for (int u = 0; u < 2 * m; ++u)
    for (int v = u + 1; v < 2 * m; ++v)
      if (!(u / 2 == v / 2)) g.add_edge(u, v);
  return g;
}

Graph triple_isolated() { return Graph(3); }

Graph fig1_nine_vertex() {
  Graph g(9);
  // vertices 3,4 -> {1,2}; 5,6 -> {0,2}; 7,8 -> {0,1}
  for (int c : {3, 4}) { g.add_edge(c, 1); g.add_edge(c, 2); }
  for (int c : {5, 6}) { g.add_edge(c, 0); g.add_edge(c, 2); }
  for (int c : {7, 8}) { g.add_edge(c, 0); g.add_edge(c, 1); }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  require(a.n() + b.n() <= kMaxVertices, "disjoint_union: combined order exceeds 64");
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

Graph add_universal_vertex(const Graph& g) {
  require(g.n() + 1 <= kMaxVertices, "add_universal_vertex: order exceeds 64");
  Graph out(g.n() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < g.n(); ++v) out.add_edge(v, g.n());
  return out;
}

Graph construct_named(std::string_view name, std::span<const std::string> params) {
  auto arity = [&](std::size_t want) {
    if (params.size() != want) {
      throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(want) +
                                  " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "complete") { arity(1); return complete_graph(parse_int(params[0])); }
  if (name == "cycle") { arity(1); return cycle_graph(parse_int(params[0])); }
  if (name == "path") { arity(1); return path_graph(parse_int(params[0])); }
  if (name == "star") { arity(1); return star_graph(parse_int(params[0])); }
  if (name == "cocktail_party") { arity(1); return cocktail_party_graph(parse_int(params[0])); }
  if (name == "triple_isolated") { arity(0); return triple_isolated(); }
  if (name == "fig1_nine_vertex") { arity(0); return fig1_nine_vertex(); }
  if (name == "disjoint_union") {
    arity(2);
    return disjoint_union(parse_graph6(params[0]), parse_graph6(params[1]));
  }
  if (name == "add_universal_vertex") { arity(1); return add_universal_vertex(parse_graph6(params[0])); }
  throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

}  // namespace domcrit
