#include "ranslice/heuristics.hpp"

#include <algorithm>
#include <numeric>

#include "ranslice/embedding_detail.hpp"

namespace ranslice {

std::vector<VnfId> order_vnfs(const SliceSet& slices, VnfOrderKey key) {
  std::vector<VnfId> order = slices.all_vnfs();
  auto key_of = [&](VnfId u) {
    return key == VnfOrderKey::ByDemandDesc ? slices.demand(u) : slices.degree(u);
  };
  std::sort(order.begin(), order.end(), [&](VnfId a, VnfId b) {
    int ka = key_of(a), kb = key_of(b);
    if (ka != kb) return ka > kb;
    return a < b;
  });
  return order;
}

std::vector<int> nodes_by_residual_desc(const ResidualState& state) {
  std::vector<int> order(state.node_residual.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (state.node_residual[a] != state.node_residual[b])
      return state.node_residual[a] > state.node_residual[b];
    return a < b;
  });
  return order;
}

namespace detail {

std::vector<HostDemand> neighbor_host_demands(VnfId u, const SliceSet& slices,
                                              const MappingPlan& plan) {
  const Slice& sl = slices.slices[u.slice];
  std::map<int, int> by_host;
  for (const auto& nb : sl.neighbors(u.index)) {
    int host = plan.host({u.slice, nb.index});
    if (host < 0) continue;
    by_host[host] += sl.links()[nb.link].bandwidth;
  }
  std::vector<HostDemand> out;
  out.reserve(by_host.size());
  for (const auto& [host, bw] : by_host) out.push_back({host, bw});
  return out;
}

std::vector<int> neighborhood_candidates(const std::vector<HostDemand>& hosts,
                                         const SubstrateNetwork& substrate) {
  std::vector<int> common;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    std::vector<int> adj;
    for (const auto& nb : substrate.neighbors(hosts[i].host)) adj.push_back(nb.node);
    if (i == 0) {
      common = std::move(adj);
    } else {
      std::vector<int> merged;
      std::set_intersection(common.begin(), common.end(), adj.begin(), adj.end(),
                            std::back_inserter(merged));
      common = std::move(merged);
    }
  }
  std::vector<int> candidates;
  candidates.reserve(hosts.size() + common.size());
  for (const auto& hd : hosts) candidates.push_back(hd.host);
  candidates.insert(candidates.end(), common.begin(), common.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

bool placement_feasible(int t, int demand, const std::vector<HostDemand>& hosts,
                        const SubstrateNetwork& substrate, const ResidualState& state) {
  if (state.node_residual[t] < demand) return false;
  for (const auto& hd : hosts) {
    if (hd.host == t) continue;  // co-location, zero bandwidth
    int li = substrate.link_index(t, hd.host);
    if (li < 0) return false;
    if (state.link_residual[li] < hd.bandwidth) return false;
  }
  return true;
}

void apply_placement(VnfId u, int t, int demand, const std::vector<HostDemand>& hosts,
                     const SubstrateNetwork& substrate, MappingPlan& plan,
                     ResidualState& state) {
  plan.assignments[u] = t;
  state.node_residual[t] -= demand;
  for (const auto& hd : hosts) {
    if (hd.host == t) continue;
    state.link_residual[substrate.link_index(t, hd.host)] -= hd.bandwidth;
  }
}

}  // namespace detail

bool embed_vnf(VnfId u, const SubstrateNetwork& substrate, const SliceSet& slices,
               MappingPlan& plan, ResidualState& state) {
  const int demand = slices.demand(u);
  auto hosts = detail::neighbor_host_demands(u, slices, plan);

  if (hosts.empty()) {
    // Only the top-residual node is probed.
    int best = -1;
    for (int s = 0; s < substrate.node_count(); ++s)
      if (best < 0 || state.node_residual[s] > state.node_residual[best]) best = s;
    if (best < 0 || state.node_residual[best] < demand) return false;
    detail::apply_placement(u, best, demand, hosts, substrate, plan, state);
    return true;
  }

  std::vector<int> candidates = detail::neighborhood_candidates(hosts, substrate);
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    if (state.node_residual[a] != state.node_residual[b])
      return state.node_residual[a] > state.node_residual[b];
    return a < b;
  });
  for (int t : candidates) {
    if (!detail::placement_feasible(t, demand, hosts, substrate, state)) continue;
    detail::apply_placement(u, t, demand, hosts, substrate, plan, state);
    return true;
  }
  return false;
}

namespace {

SolveOutput solve_ordered(const SubstrateNetwork& substrate, const SliceSet& slices,
                          VnfOrderKey key) {
  SolveOutput out{MappingPlan{}, full_residual(substrate)};
  for (VnfId u : order_vnfs(slices, key))
    embed_vnf(u, substrate, slices, out.plan, out.residual);  // skips are final
  return out;
}

}  // namespace

SolveOutput solve_rba(const SubstrateNetwork& substrate, const SliceSet& slices) {
  return solve_ordered(substrate, slices, VnfOrderKey::ByDemandDesc);
}

SolveOutput solve_cba(const SubstrateNetwork& substrate, const SliceSet& slices) {
  return solve_ordered(substrate, slices, VnfOrderKey::ByDegreeDesc);
}

}  // namespace ranslice
