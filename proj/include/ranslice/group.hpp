#pragma once

#include <optional>

#include "ranslice/heuristics.hpp"
#include "ranslice/model.hpp"

namespace ranslice {

// Key used both to pick cluster heads greedily and to order the final list.
enum class ClusterKey { BySizeDesc, ByHeadCumulativeDesc };

// Head plus the slice-neighbors it absorbed; members excludes the head and
// is ascending. Clusters partition the full VNF set.
struct Cluster {
  VnfId head;
  std::vector<VnfId> members;
};

// Greedy construction: repeatedly pick the pool VNF maximizing the key
// (degree within the pool for BySizeDesc, neighborhood-cumulative demand
// over the full slice adjacency for ByHeadCumulativeDesc), absorb its
// unassigned slice-neighbors, and remove them all from the pool. Ties break
// by ascending id. The emitted order is non-increasing in the key.
std::vector<Cluster> build_clusters(const SliceSet& slices, ClusterKey key);

// Own demand plus the demands of all slice neighbors.
int cumulative_vnf(VnfId v, const SliceSet& slices);

// Own residual plus the residuals of all substrate neighbors (live values,
// not initial capacities).
int cumulative_node(int s, const ResidualState& state, const SubstrateNetwork& substrate);

// Resolution of the all-negative case in select_by_difference.
enum class NegativeRule { ClosestToZero, MostNegative };

// Difference d(s) = cumulative_node(s) - target. Prefers the smallest
// non-negative d; with only negatives, ClosestToZero takes the maximum d and
// MostNegative the minimum. Ties break by ascending node id. Empty
// candidate list yields nullopt.
std::optional<int> select_by_difference(const std::vector<int>& candidates, int target,
                                        const ResidualState& state,
                                        const SubstrateNetwork& substrate,
                                        NegativeRule rule = NegativeRule::ClosestToZero);

struct GroupOptions {
  NegativeRule negative_rule = NegativeRule::ClosestToZero;
};

// Group placement for one VNF: candidates are the resource-feasible nodes
// (no assigned neighbor) or the embed_vnf neighborhood set under the same
// feasibility conditions; the pick among feasible candidates is by
// cumulative difference against the VNF's own cumulative demand.
bool embed_group(VnfId u, const SubstrateNetwork& substrate, const SliceSet& slices,
                 MappingPlan& plan, ResidualState& state,
                 const GroupOptions& options = {});

SolveOutput solve_gcba(const SubstrateNetwork& substrate, const SliceSet& slices,
                       const GroupOptions& options = {});
SolveOutput solve_gba(const SubstrateNetwork& substrate, const SliceSet& slices,
                      const GroupOptions& options = {});

}  // namespace ranslice
