#pragma once

#include <cstdint>
#include <random>

#include "ranslice/model.hpp"

namespace ranslice {

// Inclusive integer interval.
struct Range {
  int lo = 0;
  int hi = 0;
  bool valid() const { return lo >= 0 && lo <= hi; }
};

enum class Regime { Normal, Shortage, Custom };

inline constexpr int kRandomDegree = -1;

// Seeded instance generation. Every quantity is drawn uniformly from its
// range with std::mt19937_64; identical seed + config reproduce the instance
// bit-exactly within one build. Draw order: substrate size, substrate edges,
// node capacities, link capacities (links in sorted order), slice count,
// slice sizes, then per slice: edges, demands, bandwidths.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  Regime regime = Regime::Custom;
  Range n_substrate{60, 100};
  Range node_capacity{4, 8};
  Range n_slices{2, 10};
  Range vnfs_per_slice{10, 100};
  // Fixed per-node degree. Random means: substrate falls back to the
  // tree-plus-extras topology, slices draw a degree from [2,4] per slice.
  int substrate_degree = kRandomDegree;
  int vnf_degree = kRandomDegree;
  Range link_capacity{4, 8};
  Range bandwidth_demand{1, 2};
  Range vnf_demand{1, 2};
  // When > 0, overrides vnfs_per_slice: the total is split evenly across the
  // drawn slice count (first remainder slices get one extra).
  int total_vnfs = 0;
};

GeneratorConfig normal_config(std::uint64_t seed);
GeneratorConfig shortage_config(std::uint64_t seed);

struct InfeasibleConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance generate(const GeneratorConfig& config);

// Topology builders, exposed for direct testing. Edges come back sorted and
// deduplicated with a < b.
//
// Fixed-degree graphs use stub pairing with restarts until simple and
// connected; k = 2 is a uniform random cycle, k = n-1 the complete graph.
// When n*k is odd one node takes degree k+1 (or k-1 if k+1 exceeds n-1).
std::vector<std::pair<int, int>> random_connected_regular_graph(int n, int k,
                                                                std::mt19937_64& rng);
// Uniform spanning tree (Prüfer decode) plus extra edges up to a target edge
// count drawn from [n-1, min(n(n-1)/2, 2n)].
std::vector<std::pair<int, int>> random_connected_graph(int n, std::mt19937_64& rng);

}  // namespace ranslice
