#include "ranslice/group.hpp"

#include <algorithm>
#include <set>

#include "ranslice/embedding_detail.hpp"

namespace ranslice {

int cumulative_vnf(VnfId v, const SliceSet& slices) {
  const Slice& sl = slices.slices[v.slice];
  int score = sl.vnfs()[v.index].demand;
  for (const auto& nb : sl.neighbors(v.index)) score += sl.vnfs()[nb.index].demand;
  return score;
}

int cumulative_node(int s, const ResidualState& state, const SubstrateNetwork& substrate) {
  int score = state.node_residual[s];
  for (const auto& nb : substrate.neighbors(s)) score += state.node_residual[nb.node];
  return score;
}

std::vector<Cluster> build_clusters(const SliceSet& slices, ClusterKey key) {
  std::set<VnfId> pool;
  for (VnfId u : slices.all_vnfs()) pool.insert(u);

  auto key_of = [&](VnfId u) {
    if (key == ClusterKey::ByHeadCumulativeDesc) return cumulative_vnf(u, slices);
    int deg = 0;  // degree among the remaining pool
    for (const auto& nb : slices.slices[u.slice].neighbors(u.index))
      if (pool.count({u.slice, nb.index})) ++deg;
    return deg;
  };

  std::vector<Cluster> clusters;
  while (!pool.empty()) {
    VnfId head = *pool.begin();
    int best = key_of(head);
    for (VnfId u : pool) {
      int k = key_of(u);
      if (k > best) {
        best = k;
        head = u;
      }
    }
    Cluster c{head, {}};
    pool.erase(head);
    for (const auto& nb : slices.slices[head.slice].neighbors(head.index)) {
      VnfId member{head.slice, nb.index};
      if (pool.erase(member)) c.members.push_back(member);
    }
    std::sort(c.members.begin(), c.members.end());
    clusters.push_back(std::move(c));
  }
  return clusters;
}

std::optional<int> select_by_difference(const std::vector<int>& candidates, int target,
                                        const ResidualState& state,
                                        const SubstrateNetwork& substrate,
                                        NegativeRule rule) {
  std::optional<int> best_nonneg, best_neg;
  int best_nonneg_d = 0, best_neg_d = 0;
  for (int s : candidates) {
    int d = cumulative_node(s, state, substrate) - target;
    if (d >= 0) {
      if (!best_nonneg || d < best_nonneg_d || (d == best_nonneg_d && s < *best_nonneg)) {
        best_nonneg = s;
        best_nonneg_d = d;
      }
    } else {
      bool better = !best_neg ||
                    (rule == NegativeRule::ClosestToZero ? d > best_neg_d : d < best_neg_d) ||
                    (d == best_neg_d && s < *best_neg);
      if (better) {
        best_neg = s;
        best_neg_d = d;
      }
    }
  }
  return best_nonneg ? best_nonneg : best_neg;
}

bool embed_group(VnfId u, const SubstrateNetwork& substrate, const SliceSet& slices,
                 MappingPlan& plan, ResidualState& state, const GroupOptions& options) {
  const int demand = slices.demand(u);
  const int target = cumulative_vnf(u, slices);
  auto hosts = detail::neighbor_host_demands(u, slices, plan);

  std::vector<int> feasible;
  if (hosts.empty()) {
    for (int s = 0; s < substrate.node_count(); ++s)
      if (state.node_residual[s] >= demand) feasible.push_back(s);
  } else {
    for (int t : detail::neighborhood_candidates(hosts, substrate))
      if (detail::placement_feasible(t, demand, hosts, substrate, state))
        feasible.push_back(t);
  }

  auto pick = select_by_difference(feasible, target, state, substrate, options.negative_rule);
  if (!pick) return false;
  detail::apply_placement(u, *pick, demand, hosts, substrate, plan, state);
  return true;
}

namespace {

SolveOutput solve_clustered(const SubstrateNetwork& substrate, const SliceSet& slices,
                            ClusterKey key, const GroupOptions& options) {
  SolveOutput out{MappingPlan{}, full_residual(substrate)};
  for (const Cluster& c : build_clusters(slices, key)) {
    embed_group(c.head, substrate, slices, out.plan, out.residual, options);
    for (VnfId member : c.members)
      embed_group(member, substrate, slices, out.plan, out.residual, options);
  }
  return out;
}

}  // namespace

SolveOutput solve_gcba(const SubstrateNetwork& substrate, const SliceSet& slices,
                       const GroupOptions& options) {
  return solve_clustered(substrate, slices, ClusterKey::BySizeDesc, options);
}

SolveOutput solve_gba(const SubstrateNetwork& substrate, const SliceSet& slices,
                      const GroupOptions& options) {
  return solve_clustered(substrate, slices, ClusterKey::ByHeadCumulativeDesc, options);
}

}  // namespace ranslice
