#include "ranslice/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ranslice {

GeneratorConfig normal_config(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.regime = Regime::Normal;
  cfg.n_substrate = {60, 100};
  cfg.node_capacity = {4, 8};
  cfg.n_slices = {2, 10};
  cfg.vnfs_per_slice = {10, 100};
  cfg.link_capacity = {4, 8};
  cfg.bandwidth_demand = {1, 2};
  cfg.vnf_demand = {1, 2};
  return cfg;
}

GeneratorConfig shortage_config(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.regime = Regime::Shortage;
  cfg.n_substrate = {60, 100};
  cfg.node_capacity = {2, 4};
  cfg.n_slices = {2, 10};
  cfg.vnfs_per_slice = {1, 10};
  cfg.link_capacity = {2, 4};
  cfg.bandwidth_demand = {1, 2};
  cfg.vnf_demand = {1, 2};
  return cfg;
}

namespace {

int draw(Range r, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(r.lo, r.hi)(rng);
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

std::vector<std::pair<int, int>> finish_edges(std::set<std::pair<int, int>> edges) {
  return {edges.begin(), edges.end()};
}

// One pairing attempt over the degree sequence; empty result on dead end.
std::vector<std::pair<int, int>> try_pairing(const std::vector<int>& degrees,
                                             std::mt19937_64& rng) {
  std::vector<int> stubs;
  for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
    stubs.insert(stubs.end(), degrees[v], v);
  std::set<std::pair<int, int>> edges;

  auto take = [&](std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    stubs[i] = stubs.back();
    stubs.pop_back();
    stubs[j] = stubs.back();
    stubs.pop_back();
  };

  while (!stubs.empty()) {
    bool placed = false;
    for (int tries = 0; tries < 64 && !placed; ++tries) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, stubs.size() - 1)(rng);
      std::size_t j = std::uniform_int_distribution<std::size_t>(0, stubs.size() - 1)(rng);
      if (i == j) continue;
      int a = stubs[i], b = stubs[j];
      if (a == b) continue;
      auto e = std::minmax(a, b);
      if (edges.count({e.first, e.second})) continue;
      edges.insert({e.first, e.second});
      take(i, j);
      placed = true;
    }
    if (placed) continue;
    // Random picks stalled; fall back to scanning for any legal pair.
    std::vector<std::pair<std::size_t, std::size_t>> legal;
    for (std::size_t i = 0; i < stubs.size(); ++i)
      for (std::size_t j = i + 1; j < stubs.size(); ++j) {
        if (stubs[i] == stubs[j]) continue;
        auto e = std::minmax(stubs[i], stubs[j]);
        if (!edges.count({e.first, e.second})) legal.emplace_back(i, j);
      }
    if (legal.empty()) return {};  // dead end, restart
    auto [i, j] = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
    auto e = std::minmax(stubs[i], stubs[j]);
    edges.insert({e.first, e.second});
    take(i, j);
  }
  return finish_edges(std::move(edges));
}

}  // namespace

std::vector<std::pair<int, int>> random_connected_regular_graph(int n, int k,
                                                                std::mt19937_64& rng) {
  if (n < 1 || k < 0 || k >= n)
    throw InfeasibleConfigError("no " + std::to_string(k) + "-regular graph on " +
                                std::to_string(n) + " nodes");
  if (n == 1) return {};
  if (k == 0)
    throw InfeasibleConfigError("degree 0 cannot connect " + std::to_string(n) + " nodes");

  std::vector<int> degrees(n, k);
  if ((static_cast<long long>(n) * k) % 2 != 0)
    degrees[n - 1] = (k + 1 <= n - 1) ? k + 1 : k - 1;

  long long edge_count = std::accumulate(degrees.begin(), degrees.end(), 0LL) / 2;
  if (edge_count < n - 1)
    throw InfeasibleConfigError("degree " + std::to_string(k) + " too small to connect " +
                                std::to_string(n) + " nodes");

  if (k == n - 1 && degrees[n - 1] == k) {  // complete graph
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return edges;
  }

  if (k == 2 && degrees[n - 1] == 2) {  // uniform random cycle
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      auto e = std::minmax(perm[i], perm[(i + 1) % n]);
      edges.insert({e.first, e.second});
    }
    return finish_edges(std::move(edges));
  }

  for (int attempt = 0; attempt < 500; ++attempt) {
    auto edges = try_pairing(degrees, rng);
    if (!edges.empty() && connected(n, edges)) return edges;
  }
  throw InfeasibleConfigError("failed to realize a connected " + std::to_string(k) +
                              "-regular graph on " + std::to_string(n) + " nodes");
}

std::vector<std::pair<int, int>> random_connected_graph(int n, std::mt19937_64& rng) {
  if (n < 1) throw InfeasibleConfigError("graph needs at least one node");
  if (n == 1) return {};
  if (n == 2) return {{0, 1}};

  // Prüfer decode of a uniform random labelled tree.
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::set<std::pair<int, int>> edges;
  for (int x : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    auto e = std::minmax(leaf, x);
    edges.insert({e.first, e.second});
    if (--degree[x] == 1) leaves.insert(x);
  }
  int u = *leaves.begin();
  int v = *std::next(leaves.begin());
  edges.insert({std::min(u, v), std::max(u, v)});

  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  long long target = std::uniform_int_distribution<long long>(
      n - 1, std::min<long long>(max_edges, 2LL * n))(rng);
  long long guard = 64 * target;
  while (static_cast<long long>(edges.size()) < target && guard-- > 0) {
    int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a == b) continue;
    edges.insert(std::minmax(a, b));
  }
  return finish_edges(std::move(edges));
}

namespace {

void check_range(const Range& r, const std::string& name) {
  if (!r.valid())
    throw InfeasibleConfigError("invalid range for " + name + ": [" +
                                std::to_string(r.lo) + "," + std::to_string(r.hi) + "]");
}

}  // namespace

Instance generate(const GeneratorConfig& config) {
  check_range(config.n_substrate, "n_substrate");
  check_range(config.node_capacity, "node_capacity");
  check_range(config.n_slices, "n_slices");
  check_range(config.vnfs_per_slice, "vnfs_per_slice");
  check_range(config.link_capacity, "link_capacity");
  check_range(config.bandwidth_demand, "bandwidth_demand");
  check_range(config.vnf_demand, "vnf_demand");
  if (config.n_substrate.lo < 1)
    throw InfeasibleConfigError("substrate needs at least one node");

  std::mt19937_64 rng(config.seed);

  const int n = draw(config.n_substrate, rng);
  if (config.substrate_degree != kRandomDegree && config.substrate_degree >= n)
    throw InfeasibleConfigError("substrate degree " +
                                std::to_string(config.substrate_degree) +
                                " not below node count " + std::to_string(n));
  auto substrate_edges = config.substrate_degree == kRandomDegree
                             ? random_connected_graph(n, rng)
                             : random_connected_regular_graph(n, config.substrate_degree, rng);

  std::vector<SubstrateNode> nodes(n);
  for (int v = 0; v < n; ++v) nodes[v] = {v, draw(config.node_capacity, rng)};
  std::vector<SubstrateLink> links;
  links.reserve(substrate_edges.size());
  for (auto [a, b] : substrate_edges) links.push_back({a, b, draw(config.link_capacity, rng)});

  int n_slices = draw(config.n_slices, rng);
  std::vector<int> sizes;
  if (config.total_vnfs > 0) {
    n_slices = std::max(1, std::min(n_slices, config.total_vnfs));
    int base = config.total_vnfs / n_slices;
    int extra = config.total_vnfs % n_slices;
    for (int i = 0; i < n_slices; ++i) sizes.push_back(base + (i < extra ? 1 : 0));
  } else {
    for (int i = 0; i < n_slices; ++i) sizes.push_back(draw(config.vnfs_per_slice, rng));
  }

  SliceSet slice_set;
  for (int size : sizes) {
    if (config.vnf_degree != kRandomDegree && config.vnf_degree >= size)
      throw InfeasibleConfigError("vnf degree " + std::to_string(config.vnf_degree) +
                                  " not below slice size " + std::to_string(size));
    // Unspecified slice degree means a per-slice draw from [2,4]; slice
    // graphs stay in the fixed-degree family either way.
    int k_prime = config.vnf_degree;
    if (k_prime == kRandomDegree && size >= 2)
      k_prime = size == 2 ? 1 : draw({2, std::min(4, size - 1)}, rng);
    auto slice_edges = size < 2 ? std::vector<std::pair<int, int>>{}
                                : random_connected_regular_graph(size, k_prime, rng);
    std::vector<Vnf> vnfs(size);
    for (int v = 0; v < size; ++v) vnfs[v] = {v, draw(config.vnf_demand, rng)};
    std::vector<VirtualLink> vlinks;
    vlinks.reserve(slice_edges.size());
    for (auto [a, b] : slice_edges)
      vlinks.push_back({a, b, draw(config.bandwidth_demand, rng)});
    slice_set.slices.emplace_back(std::move(vnfs), std::move(vlinks));
  }

  return {SubstrateNetwork(std::move(nodes), std::move(links)), std::move(slice_set)};
}

}  // namespace ranslice
