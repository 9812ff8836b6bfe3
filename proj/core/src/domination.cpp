#include "domcrit/domination.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace domcrit {

namespace {

std::uint64_t closed_nbhd_bits(const Graph& g, int v) {
  return g.adjacency_bits(v) | (std::uint64_t{1} << v);
}

// Shared state for the bound-driven searches. "active" restricts both the
// vertices that need covering and the vertices allowed as dominators, which
// lets dv_sets run on G-v without building the subgraph.
struct Searcher {
  const Graph& g;
  int n;
  std::uint64_t active;
  std::vector<std::uint64_t> cover;  // cover[v] = closed neighborhood within active

  Searcher(const Graph& graph, std::uint64_t active_mask) : g(graph), n(graph.n()), active(active_mask) {
    cover.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cover[static_cast<std::size_t>(v)] = closed_nbhd_bits(g, v) & active;
  }

  int max_coverage(std::uint64_t uncovered, std::uint64_t allowed) const {
    int best = 0;
    for (std::uint64_t m = allowed; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      best = std::max(best, std::popcount(cover[static_cast<std::size_t>(v)] & uncovered));
    }
    return best;
  }

  // branch vertex: uncovered vertex with fewest allowed dominators
  int pick_branch(std::uint64_t uncovered, std::uint64_t allowed) const {
    int best_v = -1, best_c = 65;
    for (std::uint64_t m = uncovered; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int c = std::popcount(cover[static_cast<std::size_t>(v)] & allowed);
      if (c < best_c) {
        best_c = c;
        best_v = v;
      }
    }
    return best_v;
  }

  std::uint64_t greedy_cover(std::uint64_t& size_out) const {
    std::uint64_t chosen = 0, uncovered = active;
    std::uint64_t count = 0;
    while (uncovered) {
      int best_v = -1, best_c = -1;
      for (int v = 0; v < n; ++v) {
        if (!((active >> v) & 1)) continue;
        int c = std::popcount(cover[static_cast<std::size_t>(v)] & uncovered);
        if (c > best_c) {
          best_c = c;
          best_v = v;
        }
      }
      chosen |= std::uint64_t{1} << best_v;
      uncovered &= ~cover[static_cast<std::size_t>(best_v)];
      ++count;
    }
    size_out = count;
    return chosen;
  }

  // minimization search: improves best/best_set in place
  void minimize(std::uint64_t chosen, int k, std::uint64_t uncovered, int& best, std::uint64_t& best_set) const {
    if (!uncovered) {
      if (k < best) {
        best = k;
        best_set = chosen;
      }
      return;
    }
    int cov = max_coverage(uncovered, active);
    if (cov == 0) return;  // isolated-in-active vertices cannot appear, but stay safe
    int lower = (std::popcount(uncovered) + cov - 1) / cov;
    if (k + lower >= best) return;
    int u = pick_branch(uncovered, active);
    std::uint64_t cands = cover[static_cast<std::size_t>(u)];
    while (cands) {
      int w = std::countr_zero(cands);
      cands &= cands - 1;
      minimize(chosen | (std::uint64_t{1} << w), k + 1,
               uncovered & ~cover[static_cast<std::size_t>(w)], best, best_set);
    }
  }

  bool decide(std::uint64_t uncovered, int budget) const {
    if (!uncovered) return true;
    if (budget <= 0) return false;
    int cov = max_coverage(uncovered, active);
    if (cov == 0) return false;
    if ((std::popcount(uncovered) + cov - 1) / cov > budget) return false;
    int u = pick_branch(uncovered, active);
    std::uint64_t cands = cover[static_cast<std::size_t>(u)];
    while (cands) {
      int w = std::countr_zero(cands);
      cands &= cands - 1;
      if (decide(uncovered & ~cover[static_cast<std::size_t>(w)], budget - 1)) return true;
    }
    return false;
  }

  // Enumerates every dominating subset of "active" with exactly target
  // vertices. Sibling branches ban the candidates already tried, so each set
  // is produced once.
  void enumerate(std::uint64_t chosen, int k, std::uint64_t uncovered, std::uint64_t banned,
                 int target, std::vector<VertexSet>& out) const {
    if (!uncovered) {
      if (k == target) {
        out.push_back(VertexSet(chosen));
        return;
      }
      // pad with any unused allowed vertices, each completion once
      std::uint64_t extra = active & ~chosen & ~banned;
      while (extra) {
        int w = std::countr_zero(extra);
        extra &= extra - 1;
        enumerate(chosen | (std::uint64_t{1} << w), k + 1, 0, banned, target, out);
        banned |= std::uint64_t{1} << w;
      }
      return;
    }
    if (k >= target) return;
    std::uint64_t allowed = active & ~banned;
    int cov = max_coverage(uncovered, allowed);
    if (cov == 0) return;
    if (k + (std::popcount(uncovered) + cov - 1) / cov > target) return;
    int u = pick_branch(uncovered, allowed);
    std::uint64_t cands = cover[static_cast<std::size_t>(u)] & allowed;
    while (cands) {
      int w = std::countr_zero(cands);
      cands &= cands - 1;
      enumerate(chosen | (std::uint64_t{1} << w), k + 1,
                uncovered & ~cover[static_cast<std::size_t>(w)], banned, target, out);
      banned |= std::uint64_t{1} << w;
    }
  }
};

std::vector<VertexSet> dominating_sets_of_size(const Graph& g, std::uint64_t active, int target) {
  if (target < 0) return {};
  Searcher s(g, active);
  std::vector<VertexSet> out;
  s.enumerate(0, 0, active, ~active, target, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_dominating(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw std::out_of_range("is_dominating: set has vertices outside the graph");
  std::uint64_t covered = 0;
  for (int v : s) covered |= closed_nbhd_bits(g, v);
  return (covered & g.vertices().bits()) == g.vertices().bits();
}

DominationReport domination_number(const Graph& g) {
  if (g.n() == 0) return {0, VertexSet()};
  Searcher s(g, g.vertices().bits());
  std::uint64_t greedy_size = 0;
  std::uint64_t greedy_set = s.greedy_cover(greedy_size);
  int best = static_cast<int>(greedy_size);
  std::uint64_t best_set = greedy_set;
  s.minimize(0, 0, g.vertices().bits(), best, best_set);
  return {best, VertexSet(best_set)};
}

int domination_gamma(const Graph& g) { return domination_number(g).gamma; }

bool has_dominating_set_within(const Graph& g, int k) {
  if (g.n() == 0) return k >= 0;
  if (k < 0) return false;
  Searcher s(g, g.vertices().bits());
  return s.decide(g.vertices().bits(), k);
}

std::vector<VertexSet> all_minimum_dominating_sets(const Graph& g) {
  return dominating_sets_of_size(g, g.vertices().bits(), domination_number(g).gamma);
}

std::vector<VertexSet> dv_sets(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("dv_sets: vertex out of range");
  int gamma = domination_number(g).gamma;
  std::uint64_t active = g.vertices().bits() & ~(std::uint64_t{1} << v);
  return dominating_sets_of_size(g, active, gamma - 1);
}

bool is_gamma_vertex_critical(const Graph& g) {
  int gamma = domination_number(g).gamma;
  for (int v = 0; v < g.n(); ++v) {
    std::uint64_t active = g.vertices().bits() & ~(std::uint64_t{1} << v);
    Searcher s(g, active);
    if (!s.decide(active, gamma - 1)) return false;
  }
  return true;
}

namespace {

// Hopcroft-free bipartite matching: vertices on the left, distinct candidate
// sets on the right.
struct SdrMatcher {
  const std::vector<std::vector<int>>& adj;  // left -> right ids
  std::vector<int> match_right;              // right id -> left, -1 free
  std::vector<bool> visited;

  bool try_kuhn(int left) {
    for (int r : adj[static_cast<std::size_t>(left)]) {
      if (visited[static_cast<std::size_t>(r)]) continue;
      visited[static_cast<std::size_t>(r)] = true;
      if (match_right[static_cast<std::size_t>(r)] == -1 || try_kuhn(match_right[static_cast<std::size_t>(r)])) {
        match_right[static_cast<std::size_t>(r)] = left;
        return true;
      }
    }
    return false;
  }
};

void check_facts(const Graph& g, CriticalityCertificate& cert, FactsMode mode) {
  FactsReport& f = cert.facts;
  f.applicable = true;
  int n = g.n();
  for (int v = 0; v < n; ++v) {
    for (const VertexSet& d : cert.dv[static_cast<std::size_t>(v)]) {
      if (d.count() != 2) {
        f.fact1 = false;
        f.fact1_bad.push_back(v);
        break;
      }
    }
    for (const VertexSet& d : cert.dv[static_cast<std::size_t>(v)]) {
      for (int x : d) {
        if (x == v || g.has_edge(x, v)) {
          f.fact2 = false;
          f.fact2_bad.emplace_back(v, x);
        }
      }
    }
  }

  if (mode == FactsMode::Strict) {
    for (int v = 0; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        bool collide = false;
        for (const VertexSet& a : cert.dv[static_cast<std::size_t>(v)]) {
          for (const VertexSet& b : cert.dv[static_cast<std::size_t>(w)]) {
            if (a == b) collide = true;
          }
        }
        if (collide) {
          f.fact3 = false;
          f.fact3_bad.emplace_back(v, w);
        }
      }
    }
    return;
  }

  // Choosable: assign each vertex its own representative candidate set
  std::vector<std::uint64_t> sets;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (const VertexSet& d : cert.dv[static_cast<std::size_t>(v)]) {
      std::uint64_t bits = d.bits();
      auto it = std::find(sets.begin(), sets.end(), bits);
      int id;
      if (it == sets.end()) {
        id = static_cast<int>(sets.size());
        sets.push_back(bits);
      } else {
        id = static_cast<int>(it - sets.begin());
      }
      adj[static_cast<std::size_t>(v)].push_back(id);
    }
  }
  SdrMatcher matcher{adj, std::vector<int>(sets.size(), -1), std::vector<bool>(sets.size(), false)};
  for (int v = 0; v < n; ++v) {
    std::fill(matcher.visited.begin(), matcher.visited.end(), false);
    if (!matcher.try_kuhn(v)) {
      f.fact3 = false;
      f.fact3_bad.emplace_back(v, -1);
    }
  }
}

}  // namespace

CriticalityCertificate vertex_criticality(const Graph& g, FactsMode mode) {
  CriticalityCertificate cert;
  cert.gamma = domination_number(g).gamma;
  cert.dv.resize(static_cast<std::size_t>(g.n()));
  cert.is_vertex_critical = true;
  for (int v = 0; v < g.n(); ++v) {
    cert.dv[static_cast<std::size_t>(v)] = dv_sets(g, v);
    if (cert.dv[static_cast<std::size_t>(v)].empty()) {
      cert.is_vertex_critical = false;
      cert.non_critical_vertices.push_back(v);
    }
  }
  if (cert.gamma == 3 && cert.is_vertex_critical) check_facts(g, cert, mode);
  return cert;
}

bool is_gamma_edge_critical(const Graph& g) {
  int gamma = domination_number(g).gamma;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      Graph h = g;
      h.add_edge(u, v);
      if (has_dominating_set_within(h, gamma - 1)) continue;
      return false;
    }
  }
  return true;
}

Graph dv_pair_graph(const Graph& g, VertexSet s, VertexSet sources) {
  if (domination_number(g).gamma != 3) {
    throw std::invalid_argument("dv_pair_graph: graph must have domination number 3");
  }
  std::vector<int> members = s.to_vector();
  std::vector<int> position(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) position[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  Graph h(static_cast<int>(members.size()));
  for (int x : sources) {
    for (const VertexSet& d : dv_sets(g, x)) {
      if (d.count() != 2 || !d.is_subset_of(s)) continue;
      auto verts = d.to_vector();
      h.add_edge(position[static_cast<std::size_t>(verts[0])], position[static_cast<std::size_t>(verts[1])]);
    }
  }
  return h;
}

}  // namespace domcrit
