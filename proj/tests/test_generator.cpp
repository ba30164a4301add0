#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ranslice/generator.hpp"
#include "ranslice/io.hpp"
#include "ranslice/model.hpp"

using namespace ranslice;

namespace {

std::vector<int> degrees(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool graph_connected(int n, const std::vector<std::pair<int, int>>& edges) {
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

}  // namespace

TEST_CASE("normal regime draws stay inside the configured intervals") {
  GeneratorConfig cfg = normal_config(1);
  Instance inst = generate(cfg);
  CHECK(inst.substrate.node_count() >= 60);
  CHECK(inst.substrate.node_count() <= 100);
  for (const auto& node : inst.substrate.nodes()) {
    CHECK(node.capacity >= 4);
    CHECK(node.capacity <= 8);
  }
  CHECK(inst.slices.slices.size() >= 2);
  CHECK(inst.slices.slices.size() <= 10);
  for (const auto& slice : inst.slices.slices) {
    CHECK(slice.vnf_count() >= 10);
    CHECK(slice.vnf_count() <= 100);
    for (const auto& vnf : slice.vnfs()) {
      CHECK(vnf.demand >= 1);
      CHECK(vnf.demand <= 2);
    }
    for (const auto& link : slice.links()) {
      CHECK(link.bandwidth >= 1);
      CHECK(link.bandwidth <= 2);
    }
  }
  for (const auto& link : inst.substrate.links()) {
    CHECK(link.capacity >= 4);
    CHECK(link.capacity <= 8);
  }
  CHECK(validate_instance(inst.substrate, inst.slices).ok());
}

TEST_CASE("k=2 on five nodes yields the five-cycle") {
  GeneratorConfig cfg;
  cfg.seed = 3;
  cfg.n_substrate = {5, 5};
  cfg.substrate_degree = 2;
  cfg.n_slices = {1, 1};
  cfg.vnfs_per_slice = {1, 1};
  Instance inst = generate(cfg);
  REQUIRE(inst.substrate.node_count() == 5);
  REQUIRE(inst.substrate.links().size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(inst.substrate.neighbors(v).size() == 2);
  std::vector<std::pair<int, int>> edges;
  for (const auto& l : inst.substrate.links()) edges.emplace_back(l.a, l.b);
  CHECK(graph_connected(5, edges));
}

TEST_CASE("identical seed and config reproduce the instance byte for byte") {
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    GeneratorConfig cfg = shortage_config(seed);
    CHECK(instance_to_json(generate(cfg)) == instance_to_json(generate(cfg)));
  }
}

TEST_CASE("different seeds give different instances") {
  CHECK(instance_to_json(generate(shortage_config(1))) !=
        instance_to_json(generate(shortage_config(2))));
}

TEST_CASE("fixed-degree graphs are regular and connected") {
  std::mt19937_64 rng(5);
  for (int n : {11, 20, 61}) {
    for (int k : {2, 3, 4, 10}) {
      if (k >= n) continue;
      auto edges = random_connected_regular_graph(n, k, rng);
      CHECK(graph_connected(n, edges));
      auto deg = degrees(n, edges);
      if ((n * k) % 2 == 0) {
        for (int v = 0; v < n; ++v) CHECK(deg[v] == k);
      } else {
        // nearest-regular fallback: one node absorbs the odd stub
        for (int v = 0; v < n - 1; ++v) CHECK(deg[v] == k);
        CHECK(deg[n - 1] == k + 1);
      }
      std::set<std::pair<int, int>> unique_edges(edges.begin(), edges.end());
      CHECK(unique_edges.size() == edges.size());
      for (auto [a, b] : edges) CHECK(a < b);
    }
  }
}

TEST_CASE("k = n-1 yields the complete graph") {
  std::mt19937_64 rng(5);
  auto edges = random_connected_regular_graph(6, 5, rng);
  CHECK(edges.size() == 15);
}

TEST_CASE("random topology graphs are connected with bounded density") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 10, 80}) {
    auto edges = random_connected_graph(n, rng);
    CHECK(graph_connected(n, edges));
    CHECK(static_cast<long long>(edges.size()) >= n - 1);
    CHECK(static_cast<long long>(edges.size()) <=
          std::min<long long>(2LL * n, static_cast<long long>(n) * (n - 1) / 2));
  }
}

TEST_CASE("impossible degree requests are rejected") {
  GeneratorConfig cfg;
  cfg.n_substrate = {5, 5};
  cfg.substrate_degree = 5;  // k must stay below n
  CHECK_THROWS_AS(generate(cfg), InfeasibleConfigError);

  cfg.substrate_degree = 0;  // cannot connect 5 nodes with no links
  CHECK_THROWS_AS(generate(cfg), InfeasibleConfigError);

  cfg.substrate_degree = 1;  // 1-regular on 5 nodes cannot be connected
  CHECK_THROWS_AS(generate(cfg), InfeasibleConfigError);

  cfg = GeneratorConfig{};
  cfg.n_substrate = {10, 10};
  cfg.n_slices = {1, 1};
  cfg.vnfs_per_slice = {4, 4};
  cfg.vnf_degree = 4;  // k' must stay below the slice size
  CHECK_THROWS_AS(generate(cfg), InfeasibleConfigError);
}

TEST_CASE("invalid ranges are rejected") {
  GeneratorConfig cfg;
  cfg.node_capacity = {5, 2};
  CHECK_THROWS_AS(generate(cfg), InfeasibleConfigError);
}

TEST_CASE("total_vnfs splits across the drawn slices") {
  GeneratorConfig cfg = normal_config(4);
  cfg.total_vnfs = 163;
  Instance inst = generate(cfg);
  CHECK(inst.slices.total_vnfs() == 163);
  int lo = inst.slices.slices.front().vnf_count(), hi = lo;
  for (const auto& s : inst.slices.slices) {
    lo = std::min(lo, s.vnf_count());
    hi = std::max(hi, s.vnf_count());
  }
  CHECK(hi - lo <= 1);
}

TEST_CASE("sampled values stay in range across many seeds") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorConfig cfg = shortage_config(seed);
    Instance inst = generate(cfg);
    for (const auto& node : inst.substrate.nodes()) {
      CHECK(node.capacity >= 2);
      CHECK(node.capacity <= 4);
    }
    for (const auto& slice : inst.slices.slices) {
      CHECK(slice.vnf_count() >= 1);
      CHECK(slice.vnf_count() <= 10);
    }
    CHECK(validate_instance(inst.substrate, inst.slices).ok());
  }
}
