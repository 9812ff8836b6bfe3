#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace domcrit {

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices in [0, 64), backed by a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  /// Lowest vertex in the set, -1 if empty.
  constexpr int lowest() const {
    return bits_ ? std::countr_zero(bits_) : -1;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  /// Iterates set members in ascending order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    friend constexpr bool operator==(iterator, iterator) = default;
   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on at most 64 vertices.
/// Adjacency is one bitmask row per vertex; rows stay symmetric and
/// irreflexive by construction, and bits at positions >= n() stay zero.
class Graph {
 public:
  /// Empty graph on zero vertices.
  Graph() = default;
  /// Edgeless graph on n vertices. Throws std::invalid_argument unless 0 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  /// Adds edge {u,v}. Throws on out-of-range indices or u == v. Idempotent.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  VertexSet neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const;
  std::uint64_t adjacency_bits(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  int min_degree() const;
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  /// Edges as (u, v) with u < v, in ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct ComponentSummary {
  std::vector<VertexSet> components;  // ordered by lowest member vertex
  int odd_count = 0;
  int even_count = 0;
  int total = 0;
};

/// Connected components of the subgraph induced on V(g) minus `deleted`.
ComponentSummary components_after_deletion(const Graph& g, VertexSet deleted);
ComponentSummary components(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_after_deletion(const Graph& g, VertexSet deleted);

/// Subgraph induced on `keep`; vertices are renumbered in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

bool is_independent_set(const Graph& g, VertexSet s);

/// Relabels g by `image`, where image[v] is the new index of vertex v.
Graph apply_relabelling(const Graph& g, const std::vector<int>& image);

}  // namespace domcrit
