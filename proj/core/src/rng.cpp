#include "domcrit/rng.hpp"

#include <stdexcept>

namespace domcrit {

int Rng::bounded(int bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::bounded: bound must be positive");
  std::uint64_t b = static_cast<std::uint64_t>(bound);
  std::uint64_t threshold = (0 - b) % b;
  // rejection on the low word of the 128-bit product removes modulo bias
  for (;;) {
    unsigned __int128 product = static_cast<unsigned __int128>(next()) * b;
    if (static_cast<std::uint64_t>(product) >= threshold) return static_cast<int>(product >> 64);
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_graph(int n, double edge_probability, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace domcrit
