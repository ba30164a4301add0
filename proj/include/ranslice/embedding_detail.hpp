#pragma once

#include "ranslice/model.hpp"

// Placement machinery shared by the per-VNF and group embedding procedures.

namespace ranslice::detail {

// Bandwidth the VNF being placed must buy toward each distinct host of its
// already-assigned neighbors (virtual-link demands summed per host).
struct HostDemand {
  int host = 0;
  int bandwidth = 0;
};

std::vector<HostDemand> neighbor_host_demands(VnfId u, const SliceSet& slices,
                                              const MappingPlan& plan);

// Assigned-neighbor hosts plus the common substrate neighbors of all of
// them; ascending node id, deduplicated. For a single host h this is
// {h} ∪ adj(h).
std::vector<int> neighborhood_candidates(const std::vector<HostDemand>& hosts,
                                         const SubstrateNetwork& substrate);

// Node t can take the demand and is equal-or-adjacent to every neighbor
// host with enough bandwidth left on each connecting link.
bool placement_feasible(int t, int demand, const std::vector<HostDemand>& hosts,
                        const SubstrateNetwork& substrate,
                        const ResidualState& state);

void apply_placement(VnfId u, int t, int demand,
                     const std::vector<HostDemand>& hosts,
                     const SubstrateNetwork& substrate, MappingPlan& plan,
                     ResidualState& state);

}  // namespace ranslice::detail
