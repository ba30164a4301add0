#pragma once

#include "ranslice/model.hpp"

namespace ranslice {

// Ordering key for the global VNF work list.
enum class VnfOrderKey { ByDemandDesc, ByDegreeDesc };

// Permutation of all VNFs, non-increasing by key; ties break by ascending id.
std::vector<VnfId> order_vnfs(const SliceSet& slices, VnfOrderKey key);

// Live node ordering: node ids by current residual, non-increasing, ties by
// ascending id. Recomputed from the state every time it is consulted.
std::vector<int> nodes_by_residual_desc(const ResidualState& state);

struct SolveOutput {
  MappingPlan plan;
  ResidualState residual;
};

// Places one VNF or leaves plan/state untouched. Returns false on skip.
//
// No assigned neighbor: only the single highest-residual node is probed.
// Otherwise the candidate set is the assigned neighbors' hosts plus the
// common substrate neighbors of all those hosts, scanned by residual
// (non-increasing); the chosen node must fit the demand and be equal or
// adjacent to every assigned neighbor's host with enough bandwidth left for
// the virtual links it picks up (co-location costs nothing).
bool embed_vnf(VnfId u, const SubstrateNetwork& substrate, const SliceSet& slices,
               MappingPlan& plan, ResidualState& state);

SolveOutput solve_rba(const SubstrateNetwork& substrate, const SliceSet& slices);
SolveOutput solve_cba(const SubstrateNetwork& substrate, const SliceSet& slices);

}  // namespace ranslice
