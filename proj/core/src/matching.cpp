#include "domcrit/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "domcrit/constructions.hpp"

namespace domcrit {

namespace {

struct BlossomSearch {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<bool> used, in_blossom;
  std::vector<int> queue;

  explicit BlossomSearch(const Graph& graph)
      : g(graph),
        n(graph.n()),
        match(static_cast<std::size_t>(n), -1),
        parent(static_cast<std::size_t>(n), -1),
        base(static_cast<std::size_t>(n), 0),
        used(static_cast<std::size_t>(n), false),
        in_blossom(static_cast<std::size_t>(n), false) {}

  int lca(int a, int b) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (a = base[static_cast<std::size_t>(a)];; a = base[static_cast<std::size_t>(parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])])]) {
      seen[static_cast<std::size_t>(a)] = true;
      if (match[static_cast<std::size_t>(a)] == -1) break;
    }
    for (b = base[static_cast<std::size_t>(b)];; b = base[static_cast<std::size_t>(parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])])]) {
      if (seen[static_cast<std::size_t>(b)]) return b;
    }
  }

  void mark_path(int v, int stop, int child) {
    while (base[static_cast<std::size_t>(v)] != stop) {
      in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
      in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = true;
      parent[static_cast<std::size_t>(v)] = child;
      child = match[static_cast<std::size_t>(v)];
      v = parent[static_cast<std::size_t>(child)];
    }
  }

  // Grows an alternating tree from root; augments and returns true when an
  // exposed vertex is reached. On a failed search, used[] holds exactly the
  // outer vertices of the tree.
  bool try_augment(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
    used[static_cast<std::size_t>(root)] = true;
    queue.clear();
    queue.push_back(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : g.neighbors(v)) {
        if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] || match[static_cast<std::size_t>(v)] == to) continue;
        if (to == root ||
            (match[static_cast<std::size_t>(to)] != -1 && parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
          // odd cycle: contract the blossom up to the common base
          int stop = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, stop, to);
          mark_path(to, stop, v);
          for (int i = 0; i < n; ++i) {
            if (!in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) continue;
            base[static_cast<std::size_t>(i)] = stop;
            if (!used[static_cast<std::size_t>(i)]) {
              used[static_cast<std::size_t>(i)] = true;
              queue.push_back(i);
            }
          }
        } else if (parent[static_cast<std::size_t>(to)] == -1) {
          parent[static_cast<std::size_t>(to)] = v;
          if (match[static_cast<std::size_t>(to)] == -1) {
            // augment along the tree path
            while (to != -1) {
              int pv = parent[static_cast<std::size_t>(to)];
              int next = match[static_cast<std::size_t>(pv)];
              match[static_cast<std::size_t>(to)] = pv;
              match[static_cast<std::size_t>(pv)] = to;
              to = next;
            }
            return true;
          }
          used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = true;
          queue.push_back(match[static_cast<std::size_t>(to)]);
        }
      }
    }
    return false;
  }

  void run_to_maximality() {
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<std::size_t>(v)] != -1) continue;
      for (int to : g.neighbors(v)) {
        if (match[static_cast<std::size_t>(to)] == -1) {
          match[static_cast<std::size_t>(v)] = to;
          match[static_cast<std::size_t>(to)] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<std::size_t>(v)] == -1) try_augment(v);
    }
  }
};

}  // namespace

MatchingReport maximum_matching(const Graph& g) {
  MatchingReport report;
  int n = g.n();
  if (n == 0) return report;

  BlossomSearch search(g);
  search.run_to_maximality();

  int matched = 0;
  for (int v = 0; v < n; ++v) {
    int w = search.match[static_cast<std::size_t>(v)];
    if (w == -1) continue;
    ++matched;
    if (v < w) report.matching.edges.emplace_back(v, w);
  }
  report.nu = matched / 2;
  report.deficiency = n - 2 * report.nu;

  // D = union of outer vertices over the (failed) trees from exposed roots
  VertexSet d;
  for (int v = 0; v < n; ++v) {
    if (search.match[static_cast<std::size_t>(v)] != -1) continue;
    bool augmented = search.try_augment(v);
    if (augmented) throw std::logic_error("matching was not maximum at decomposition time");
    for (int i = 0; i < n; ++i) {
      if (search.used[static_cast<std::size_t>(i)]) d.add(i);
    }
  }
  VertexSet neighbor_union;
  for (int v : d) neighbor_union |= VertexSet(g.adjacency_bits(v));
  report.ge.d = d;
  report.ge.a = neighbor_union - d;
  report.ge.c = g.vertices() - d - report.ge.a;
  return report;
}

bool has_perfect_matching(const Graph& g) { return maximum_matching(g).deficiency == 0; }

bool has_near_perfect_matching(const Graph& g) {
  if (g.n() % 2 == 0) return false;
  return maximum_matching(g).deficiency == 1;
}

bool is_factor_critical(const Graph& g) {
  if (g.n() % 2 == 0) return false;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet keep = g.vertices();
    keep.remove(v);
    if (!has_perfect_matching(induced_subgraph(g, keep))) return false;
  }
  return true;
}

bool is_bicritical(const Graph& g) {
  if (g.n() % 2 != 0) return false;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      VertexSet keep = g.vertices();
      keep.remove(u);
      keep.remove(v);
      if (!has_perfect_matching(induced_subgraph(g, keep))) return false;
    }
  }
  return true;
}

DeficiencyWitness tutte_witness(const Graph& g) {
  MatchingReport report = maximum_matching(g);
  DeficiencyWitness w;
  w.s = report.ge.a;
  w.summary = components_after_deletion(g, w.s);
  w.deficit = w.summary.odd_count - w.s.count();
  return w;
}

std::optional<DeficiencyWitness> near_pm_witness(const Graph& g) {
  if (g.n() % 2 == 0) throw std::invalid_argument("near_pm_witness: order must be odd");
  Graph extended = add_universal_vertex(g);
  DeficiencyWitness outer = tutte_witness(extended);
  if (outer.deficit < 2) return std::nullopt;
  if (!outer.s.contains(g.n())) {
    throw std::logic_error("near_pm_witness: universal vertex missing from the witness");
  }
  DeficiencyWitness w;
  w.s = outer.s;
  w.s.remove(g.n());
  w.summary = components_after_deletion(g, w.s);
  w.deficit = w.summary.odd_count - w.s.count();
  return w;
}

}  // namespace domcrit
