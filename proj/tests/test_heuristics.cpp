#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ranslice/generator.hpp"
#include "ranslice/heuristics.hpp"

using namespace ranslice;
using namespace ranslice::testing;

TEST_CASE("order_vnfs sorts by demand with id tie-break") {
  SliceSet slices;
  slices.slices = {Slice({{0, 1}, {1, 3}}, {}), Slice({{0, 3}, {1, 2}}, {})};
  auto order = order_vnfs(slices, VnfOrderKey::ByDemandDesc);
  CHECK(order == std::vector<VnfId>{{0, 1}, {1, 0}, {1, 1}, {0, 0}});
}

TEST_CASE("order_vnfs by degree puts the hub of a star first") {
  // hub 0 with four leaves
  Slice star({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}},
             {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  SliceSet slices;
  slices.slices = {star};
  auto order = order_vnfs(slices, VnfOrderKey::ByDegreeDesc);
  CHECK(order.front() == VnfId{0, 0});
  // leaves all tie at degree 1 and fall back to ascending id
  CHECK(order == std::vector<VnfId>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

TEST_CASE("order_vnfs with equal degrees is plain ascending id") {
  Slice triangle({{0, 1}, {1, 1}, {2, 1}}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  SliceSet slices;
  slices.slices = {triangle};
  auto order = order_vnfs(slices, VnfOrderKey::ByDegreeDesc);
  CHECK(order == std::vector<VnfId>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("nodes_by_residual_desc is a live view with id tie-break") {
  ResidualState st;
  st.node_residual = {2, 5, 5, 1};
  CHECK(nodes_by_residual_desc(st) == std::vector<int>{1, 2, 0, 3});
  st.node_residual[1] = 0;
  CHECK(nodes_by_residual_desc(st) == std::vector<int>{2, 0, 3, 1});
}

TEST_CASE("single VNF embeds on the single node") {
  SubstrateNetwork net({{0, 4}}, {});
  SliceSet slices;
  slices.slices = {Slice({{0, 1}}, {})};
  SolveOutput out = solve_rba(net, slices);
  CHECK(objective(out.plan) == 1);
  CHECK(out.residual.node_residual[0] == 3);
}

TEST_CASE("oversized VNF is skipped everywhere") {
  std::vector<SubstrateNode> nodes;
  for (int i = 0; i < 5; ++i) nodes.push_back({i, 4});
  SubstrateNetwork net(std::move(nodes), {});
  SliceSet slices;
  slices.slices = {Slice({{0, 5}}, {})};
  CHECK(objective(solve_rba(net, slices).plan) == 0);
  CHECK(objective(solve_cba(net, slices).plan) == 0);
}

TEST_CASE("embed_vnf co-locates with an assigned neighbor at zero bandwidth") {
  Instance inst = ring5_chain_instance();
  MappingPlan plan;
  ResidualState st = full_residual(inst.substrate);
  plan.assignments[{0, 0}] = 2;
  // only the neighbor's own host has room left
  st.node_residual = {0, 0, 2, 0, 0};
  REQUIRE(embed_vnf({0, 1}, inst.substrate, inst.slices, plan, st));
  CHECK(plan.host({0, 1}) == 2);
  CHECK(st.node_residual[2] == 1);
  for (std::size_t i = 0; i < st.link_residual.size(); ++i)
    CHECK(st.link_residual[i] == inst.substrate.links()[i].capacity);
}

TEST_CASE("embed_vnf skips when hosts are full and share no neighbor") {
  // path 0-1, 1-2, 2-3: hosts 0 and 3 have no common neighbor
  std::vector<SubstrateNode> nodes{{0, 1}, {1, 4}, {2, 4}, {3, 1}};
  SubstrateNetwork net(std::move(nodes), {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}});
  SliceSet slices;
  slices.slices = {Slice({{0, 1}, {1, 1}, {2, 1}}, {{0, 2, 1}, {1, 2, 1}})};
  MappingPlan plan;
  ResidualState st = full_residual(net);
  plan.assignments[{0, 0}] = 0;
  st.node_residual[0] = 0;
  plan.assignments[{0, 1}] = 3;
  st.node_residual[3] = 0;
  CHECK_FALSE(embed_vnf({0, 2}, net, slices, plan, st));
  CHECK(plan.host({0, 2}) == -1);
  // skip leaves the state untouched
  CHECK(st.node_residual == std::vector<int>{0, 4, 4, 0});
  CHECK(st.link_residual == std::vector<int>{2, 2, 2});
}

TEST_CASE("chain on the ring lands on adjacent or equal nodes") {
  Instance inst = ring5_chain_instance();
  auto feasible = brute_force_full_plans(inst.substrate, inst.slices);
  REQUIRE_FALSE(feasible.empty());
  for (auto solve : {solve_rba, solve_cba}) {
    SolveOutput out = solve(inst.substrate, inst.slices);
    REQUIRE(objective(out.plan) == 2);
    bool known = false;
    for (const auto& plan : feasible)
      if (plan.assignments == out.plan.assignments) known = true;
    CHECK(known);
    int h0 = out.plan.host({0, 0});
    int h1 = out.plan.host({0, 1});
    if (h0 != h1) {
      int li = inst.substrate.link_index(h0, h1);
      REQUIRE(li >= 0);
      CHECK(out.residual.link_residual[li] == 1);
    }
  }
}

TEST_CASE("both heuristics fill the ring fixture") {
  Instance inst = ring5_instance();
  CHECK(objective(solve_rba(inst.substrate, inst.slices).plan) == 5);
  CHECK(objective(solve_cba(inst.substrate, inst.slices).plan) == 5);
}

TEST_CASE("solver plans validate and solvers are deterministic") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorConfig cfg = shortage_config(seed);
    cfg.n_substrate = {6, 20};
    cfg.n_slices = {1, 4};
    Instance inst = generate(cfg);
    for (auto solve : {solve_rba, solve_cba}) {
      SolveOutput a = solve(inst.substrate, inst.slices);
      SolveOutput b = solve(inst.substrate, inst.slices);
      CHECK(validate_plan(inst.substrate, inst.slices, a.plan).ok());
      CHECK(a.plan.assignments == b.plan.assignments);
    }
  }
}

TEST_CASE("residuals never increase during a run") {
  // Replay RBA's order through embed_vnf, snapshotting between steps.
  GeneratorConfig cfg = shortage_config(7);
  cfg.n_substrate = {8, 12};
  cfg.n_slices = {1, 3};
  Instance inst = generate(cfg);
  MappingPlan plan;
  ResidualState st = full_residual(inst.substrate);
  for (VnfId u : order_vnfs(inst.slices, VnfOrderKey::ByDemandDesc)) {
    ResidualState before = st;
    embed_vnf(u, inst.substrate, inst.slices, plan, st);
    for (std::size_t i = 0; i < st.node_residual.size(); ++i) {
      CHECK(st.node_residual[i] <= before.node_residual[i]);
      CHECK(st.node_residual[i] >= 0);
    }
    for (std::size_t i = 0; i < st.link_residual.size(); ++i) {
      CHECK(st.link_residual[i] <= before.link_residual[i]);
      CHECK(st.link_residual[i] >= 0);
    }
  }
}
