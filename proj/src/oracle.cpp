#include "ranslice/oracle.hpp"

#include <algorithm>

namespace ranslice {

namespace {

struct Search {
  const SubstrateNetwork& substrate;
  const SliceSet& slices;
  long long max_expansions;

  std::vector<VnfId> order;
  MappingPlan current;
  ResidualState state;
  MappingPlan best;
  int best_count = -1;
  long long expansions = 0;
  bool truncated = false;

  Search(const SubstrateNetwork& net, const SliceSet& sl, long long cap)
      : substrate(net), slices(sl), max_expansions(cap), state(full_residual(net)) {
    order = sl.all_vnfs();
  }

  // Feasibility of u -> t under current residuals, checked against the
  // already-placed neighbors only; later neighbors are constrained when
  // their own turn comes.
  bool feasible(VnfId u, int t, std::vector<std::pair<int, int>>& link_debits) const {
    if (state.node_residual[t] < slices.demand(u)) return false;
    link_debits.clear();
    const Slice& sl = slices.slices[u.slice];
    for (const auto& nb : sl.neighbors(u.index)) {
      int host = current.host({u.slice, nb.index});
      if (host < 0 || host == t) continue;
      int li = substrate.link_index(t, host);
      if (li < 0) return false;
      link_debits.emplace_back(li, sl.links()[nb.link].bandwidth);
    }
    // Demands toward neighbors sharing one host accumulate on one link.
    std::sort(link_debits.begin(), link_debits.end());
    for (std::size_t i = 0; i < link_debits.size();) {
      std::size_t j = i;
      int total = 0;
      while (j < link_debits.size() && link_debits[j].first == link_debits[i].first)
        total += link_debits[j++].second;
      if (state.link_residual[link_debits[i].first] < total) return false;
      i = j;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (truncated) return;
    int placed = static_cast<int>(current.assignments.size());
    int remaining = static_cast<int>(order.size() - depth);
    if (placed + remaining <= best_count) return;
    if (depth == order.size()) {
      best = current;
      best_count = placed;
      return;
    }
    if (++expansions > max_expansions) {
      truncated = true;
      return;
    }

    VnfId u = order[depth];
    dfs(depth + 1);  // skip branch first

    std::vector<std::pair<int, int>> link_debits;
    for (int t = 0; t < substrate.node_count(); ++t) {
      if (truncated) return;
      if (!feasible(u, t, link_debits)) continue;
      current.assignments[u] = t;
      state.node_residual[t] -= slices.demand(u);
      for (auto [li, bw] : link_debits) state.link_residual[li] -= bw;
      dfs(depth + 1);
      for (auto [li, bw] : link_debits) state.link_residual[li] += bw;
      state.node_residual[t] += slices.demand(u);
      current.assignments.erase(u);
    }
  }
};

}  // namespace

bool fits_budget(const SubstrateNetwork& substrate, const SliceSet& slices,
                 const OracleBudget& budget) {
  return slices.total_vnfs() <= budget.max_vnfs &&
         substrate.node_count() <= budget.max_nodes;
}

OracleResult solve_exact(const SubstrateNetwork& substrate, const SliceSet& slices,
                         const OracleBudget& budget) {
  if (!fits_budget(substrate, slices, budget))
    throw BudgetExceededError(
        "instance exceeds oracle budget: " + std::to_string(slices.total_vnfs()) +
        " vnfs (max " + std::to_string(budget.max_vnfs) + "), " +
        std::to_string(substrate.node_count()) + " nodes (max " +
        std::to_string(budget.max_nodes) + ")");

  Search search(substrate, slices, budget.max_expansions);
  search.dfs(0);
  return {search.best, !search.truncated};
}

}  // namespace ranslice
