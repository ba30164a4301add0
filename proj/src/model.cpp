#include "ranslice/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ranslice {

std::string to_string(VnfId id) {
  return std::to_string(id.slice) + ":" + std::to_string(id.index);
}

namespace {

std::pair<int, int> norm_pair(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string link_str(int a, int b) {
  auto [lo, hi] = norm_pair(a, b);
  return "(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
}

}  // namespace

SubstrateNetwork::SubstrateNetwork(std::vector<SubstrateNode> nodes,
                                   std::vector<SubstrateLink> links)
    : nodes_(std::move(nodes)), links_(std::move(links)) {
  const int n = node_count();
  adj_.resize(n);
  for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
    const auto& l = links_[i];
    if (l.a < 0 || l.a >= n || l.b < 0 || l.b >= n || l.a == l.b) continue;
    auto key = norm_pair(l.a, l.b);
    if (link_by_pair_.count(key)) continue;  // duplicate, keep first
    link_by_pair_[key] = i;
    adj_[l.a].push_back({l.b, i});
    adj_[l.b].push_back({l.a, i});
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
  }
}

int SubstrateNetwork::link_index(int a, int b) const {
  auto it = link_by_pair_.find(norm_pair(a, b));
  return it == link_by_pair_.end() ? -1 : it->second;
}

long long SubstrateNetwork::total_capacity() const {
  long long sum = 0;
  for (const auto& node : nodes_) sum += node.capacity;
  return sum;
}

Slice::Slice(std::vector<Vnf> vnfs, std::vector<VirtualLink> links)
    : vnfs_(std::move(vnfs)), links_(std::move(links)) {
  const int n = vnf_count();
  adj_.resize(n);
  std::map<std::pair<int, int>, int> seen;
  for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
    const auto& l = links_[i];
    if (l.a < 0 || l.a >= n || l.b < 0 || l.b >= n || l.a == l.b) continue;
    auto key = norm_pair(l.a, l.b);
    if (seen.count(key)) continue;
    seen[key] = i;
    adj_[l.a].push_back({l.b, i});
    adj_[l.b].push_back({l.a, i});
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end(), [](const SliceNeighbor& x, const SliceNeighbor& y) {
      return x.index < y.index;
    });
  }
}

int SliceSet::total_vnfs() const {
  int sum = 0;
  for (const auto& s : slices) sum += s.vnf_count();
  return sum;
}

std::vector<VnfId> SliceSet::all_vnfs() const {
  std::vector<VnfId> out;
  out.reserve(total_vnfs());
  for (int si = 0; si < static_cast<int>(slices.size()); ++si)
    for (int vi = 0; vi < slices[si].vnf_count(); ++vi) out.push_back({si, vi});
  return out;
}

bool SliceSet::contains(VnfId u) const {
  return u.slice >= 0 && u.slice < static_cast<int>(slices.size()) &&
         u.index >= 0 && u.index < slices[u.slice].vnf_count();
}

int SliceSet::demand(VnfId u) const { return slices[u.slice].vnfs()[u.index].demand; }

int SliceSet::degree(VnfId u) const {
  return static_cast<int>(slices[u.slice].neighbors(u.index).size());
}

long long SliceSet::total_demand() const {
  long long sum = 0;
  for (const auto& s : slices)
    for (const auto& v : s.vnfs()) sum += v.demand;
  return sum;
}

int MappingPlan::host(VnfId u) const {
  auto it = assignments.find(u);
  return it == assignments.end() ? -1 : it->second;
}

int objective(const MappingPlan& plan) {
  return static_cast<int>(plan.assignments.size());
}

std::vector<EdgeMapping> derive_edge_mappings(const SliceSet& slices,
                                              const MappingPlan& plan) {
  std::vector<EdgeMapping> out;
  for (int si = 0; si < static_cast<int>(slices.slices.size()); ++si) {
    const Slice& sl = slices.slices[si];
    for (const auto& link : sl.links()) {
      if (link.a < 0 || link.a >= sl.vnf_count() || link.b < 0 ||
          link.b >= sl.vnf_count() || link.a == link.b)
        continue;
      VnfId u{si, std::min(link.a, link.b)};
      VnfId v{si, std::max(link.a, link.b)};
      int hu = plan.host(u);
      int hv = plan.host(v);
      if (hu < 0 || hv < 0) continue;
      out.push_back({u, v, hu, hv, link.bandwidth});
    }
  }
  return out;
}

std::string ValidationReport::joined() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v << "\n";
  return os.str();
}

ValidationReport validate_instance(const SubstrateNetwork& substrate,
                                   const SliceSet& slices) {
  ValidationReport report;
  auto add = [&](const std::string& msg) { report.violations.push_back(msg); };

  const int n = substrate.node_count();
  for (int i = 0; i < n; ++i) {
    const auto& node = substrate.nodes()[i];
    if (node.id != i)
      add("node id not dense: position " + std::to_string(i) + " has id " +
          std::to_string(node.id));
    if (node.capacity < 0)
      add("negative capacity: node " + std::to_string(node.id));
  }
  std::map<std::pair<int, int>, int> seen_links;
  for (const auto& l : substrate.links()) {
    if (l.a == l.b) {
      add("self-loop link " + link_str(l.a, l.b));
      continue;
    }
    if (l.a < 0 || l.a >= n || l.b < 0 || l.b >= n) {
      add("dangling link endpoint: link " + link_str(l.a, l.b));
      continue;
    }
    auto key = norm_pair(l.a, l.b);
    if (seen_links.count(key))
      add("duplicate link " + link_str(l.a, l.b));
    else
      seen_links[key] = 1;
    if (l.capacity < 0)
      add("missing or negative capacity: link " + link_str(l.a, l.b));
  }

  for (int si = 0; si < static_cast<int>(slices.slices.size()); ++si) {
    const Slice& sl = slices.slices[si];
    const std::string tag = "slice " + std::to_string(si);
    for (int vi = 0; vi < sl.vnf_count(); ++vi) {
      const auto& vnf = sl.vnfs()[vi];
      if (vnf.id != vi)
        add(tag + ": vnf id not dense: position " + std::to_string(vi) +
            " has id " + std::to_string(vnf.id));
      if (vnf.demand < 0) add(tag + ": negative demand: vnf " + std::to_string(vnf.id));
    }
    std::map<std::pair<int, int>, int> seen;
    for (const auto& l : sl.links()) {
      if (l.a == l.b) {
        add(tag + ": self-loop virtual link " + link_str(l.a, l.b));
        continue;
      }
      if (l.a < 0 || l.a >= sl.vnf_count() || l.b < 0 || l.b >= sl.vnf_count()) {
        add(tag + ": dangling virtual link endpoint: link " + link_str(l.a, l.b));
        continue;
      }
      auto key = norm_pair(l.a, l.b);
      if (seen.count(key))
        add(tag + ": duplicate virtual link " + link_str(l.a, l.b));
      else
        seen[key] = 1;
      if (l.bandwidth < 0)
        add(tag + ": missing bandwidth demand: virtual link " + link_str(l.a, l.b));
    }
  }
  return report;
}

ValidationReport validate_plan(const SubstrateNetwork& substrate,
                               const SliceSet& slices, const MappingPlan& plan) {
  ValidationReport report;
  auto add = [&](const std::string& msg) { report.violations.push_back(msg); };
  const int n = substrate.node_count();

  for (const auto& [u, host] : plan.assignments) {
    if (!slices.contains(u)) {
      add("dangling vnf: " + to_string(u) + " not present in any slice");
      continue;
    }
    if (host < 0 || host >= n)
      add("dangling node: vnf " + to_string(u) + " assigned to missing node " +
          std::to_string(host));
  }

  // (a) node capacity
  std::vector<long long> load(n, 0);
  for (const auto& [u, host] : plan.assignments) {
    if (!slices.contains(u) || host < 0 || host >= n) continue;
    load[host] += slices.demand(u);
  }
  for (int s = 0; s < n; ++s) {
    if (load[s] > substrate.nodes()[s].capacity)
      add("node capacity violated: node " + std::to_string(s) + " load " +
          std::to_string(load[s]) + " > capacity " +
          std::to_string(substrate.nodes()[s].capacity));
  }

  // (b) link capacity and (c) connectivity over derived edge mappings;
  // co-located pairs satisfy connectivity and consume no bandwidth.
  std::map<int, long long> link_load;
  for (const auto& em : derive_edge_mappings(slices, plan)) {
    if (em.host_u < 0 || em.host_u >= n || em.host_v < 0 || em.host_v >= n) continue;
    if (em.host_u == em.host_v) continue;
    int li = substrate.link_index(em.host_u, em.host_v);
    if (li < 0) {
      add("connectivity violated: virtual link (" + to_string(em.u) + "," +
          to_string(em.v) + ") mapped to non-adjacent nodes " +
          link_str(em.host_u, em.host_v));
      continue;
    }
    link_load[li] += em.bandwidth;
  }
  for (const auto& [li, used] : link_load) {
    const auto& l = substrate.links()[li];
    if (used > l.capacity)
      add("link capacity violated: link " + link_str(l.a, l.b) + " load " +
          std::to_string(used) + " > capacity " + std::to_string(l.capacity));
  }

  // (d) convergence holds by construction of the assignment map.
  return report;
}

ResidualState full_residual(const SubstrateNetwork& substrate) {
  ResidualState st;
  st.node_residual.reserve(substrate.node_count());
  for (const auto& node : substrate.nodes()) st.node_residual.push_back(node.capacity);
  st.link_residual.reserve(substrate.links().size());
  for (const auto& link : substrate.links()) st.link_residual.push_back(link.capacity);
  return st;
}

ResidualState residual_after(const SubstrateNetwork& substrate,
                             const SliceSet& slices, const MappingPlan& plan) {
  ResidualState st = full_residual(substrate);
  for (const auto& [u, host] : plan.assignments) {
    if (!slices.contains(u) || host < 0 || host >= substrate.node_count())
      throw InfeasiblePlanError("plan references unknown vnf or node");
    st.node_residual[host] -= slices.demand(u);
    if (st.node_residual[host] < 0)
      throw InfeasiblePlanError("node residual negative at node " + std::to_string(host));
  }
  for (const auto& em : derive_edge_mappings(slices, plan)) {
    if (em.host_u == em.host_v) continue;
    int li = substrate.link_index(em.host_u, em.host_v);
    if (li < 0)
      throw InfeasiblePlanError("edge mapping on non-adjacent nodes " +
                                link_str(em.host_u, em.host_v));
    st.link_residual[li] -= em.bandwidth;
    if (st.link_residual[li] < 0)
      throw InfeasiblePlanError("link residual negative on link " +
                                link_str(em.host_u, em.host_v));
  }
  return st;
}

}  // namespace ranslice
