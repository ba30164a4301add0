#pragma once

#include <vector>

#include "ranslice/model.hpp"

// Shared hand-built instances and the nested-enumeration reference solver
// used to pin expected counts independently of the search-based oracle.

namespace ranslice::testing {

// Five substrate nodes in a ring (capacity 4, link capacity 2) carrying two
// slices: a demand-2/demand-1 pair and a unit-demand triangle, all
// virtual-link bandwidths 1. Every solver should fit all five VNFs.
inline Instance ring5_instance() {
  std::vector<SubstrateNode> nodes;
  for (int i = 0; i < 5; ++i) nodes.push_back({i, 4});
  std::vector<SubstrateLink> links{{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {0, 4, 2}};

  Slice pair({{0, 2}, {1, 1}}, {{0, 1, 1}});
  Slice triangle({{0, 1}, {1, 1}, {2, 1}}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});

  SliceSet slices;
  slices.slices = {pair, triangle};
  return {SubstrateNetwork(std::move(nodes), std::move(links)), std::move(slices)};
}

// One node of capacity 4; a single slice of three isolated VNFs demanding
// 3, 2, 2. Only the 2+2 subset fits.
inline Instance single_node_knapsack_instance() {
  std::vector<SubstrateNode> nodes{{0, 4}};
  Slice slice({{0, 3}, {1, 2}, {2, 2}}, {});
  SliceSet slices;
  slices.slices = {slice};
  return {SubstrateNetwork(std::move(nodes), {}), std::move(slices)};
}

// Two linked nodes of capacity 2; one slice holding a demand-2 path of
// three VNFs. At most two of them fit.
inline Instance two_node_path_instance() {
  std::vector<SubstrateNode> nodes{{0, 2}, {1, 2}};
  std::vector<SubstrateLink> links{{0, 1, 2}};
  Slice slice({{0, 2}, {1, 2}, {2, 2}}, {{0, 1, 1}, {1, 2, 1}});
  SliceSet slices;
  slices.slices = {slice};
  return {SubstrateNetwork(std::move(nodes), std::move(links)), std::move(slices)};
}

// Ring substrate with a single chain slice (demands 2 and 1, bandwidth 1).
inline Instance ring5_chain_instance() {
  Instance inst = ring5_instance();
  SliceSet slices;
  slices.slices = {Slice({{0, 2}, {1, 1}}, {{0, 1, 1}})};
  inst.slices = std::move(slices);
  return inst;
}

// Exhaustive reference: tries every assignment of every VNF to every node or
// none, keeps the best validate_plan-feasible count. (|N^S|+1)^|N^V| plans.
inline int brute_force_best_count(const SubstrateNetwork& substrate,
                                  const SliceSet& slices) {
  std::vector<VnfId> vnfs = slices.all_vnfs();
  const int n = substrate.node_count();
  const int choices = n + 1;  // node id, or n meaning "skip"
  int best = 0;
  std::vector<int> pick(vnfs.size(), 0);
  for (;;) {
    MappingPlan plan;
    int count = 0;
    for (std::size_t i = 0; i < vnfs.size(); ++i) {
      if (pick[i] == n) continue;
      plan.assignments[vnfs[i]] = pick[i];
      ++count;
    }
    if (count > best && validate_plan(substrate, slices, plan).ok()) best = count;

    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return best;
}

// All full assignments (every VNF placed) that validate, for small instances.
inline std::vector<MappingPlan> brute_force_full_plans(const SubstrateNetwork& substrate,
                                                       const SliceSet& slices) {
  std::vector<VnfId> vnfs = slices.all_vnfs();
  const int n = substrate.node_count();
  std::vector<MappingPlan> feasible;
  std::vector<int> pick(vnfs.size(), 0);
  for (;;) {
    MappingPlan plan;
    for (std::size_t i = 0; i < vnfs.size(); ++i) plan.assignments[vnfs[i]] = pick[i];
    if (validate_plan(substrate, slices, plan).ok()) feasible.push_back(plan);

    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == n) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return feasible;
}

}  // namespace ranslice::testing
