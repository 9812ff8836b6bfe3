#pragma once

#include <cstdint>
#include <random>

#include "domcrit/graph.hpp"

namespace domcrit {

// Deterministic across platforms: mt19937_64 is fully specified, and the
// derived quantities below use only its raw output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, bound), bound >= 1; Lemire-style rejection
  int bounded(int bound);

  // uniform in [0, 1), 53-bit resolution
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 step, used to give parallel work items independent streams
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// G(n, p) with edges drawn in ascending pair order
Graph random_graph(int n, double edge_probability, Rng& rng);

}  // namespace domcrit
