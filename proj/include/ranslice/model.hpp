#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Domain types for the slice embedding problem: substrate network, slice
// graphs, mapping plans, residual accounting, and the constraint validator.
// All resource and bandwidth quantities are non-negative integer units.

namespace ranslice {

// Globally unique VNF identifier: owning slice index + local index.
struct VnfId {
  int slice = 0;
  int index = 0;
  auto operator<=>(const VnfId&) const = default;
};

std::string to_string(VnfId id);

struct SubstrateNode {
  int id = 0;
  int capacity = 0;
};

// capacity < 0 marks a missing/invalid entry; validate_instance reports it.
struct SubstrateLink {
  int a = 0;
  int b = 0;
  int capacity = 0;
};

struct Neighbor {
  int node = 0;
  int link = 0;  // index into links()
};

class SubstrateNetwork {
 public:
  SubstrateNetwork() = default;
  SubstrateNetwork(std::vector<SubstrateNode> nodes,
                   std::vector<SubstrateLink> links);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<SubstrateNode>& nodes() const { return nodes_; }
  const std::vector<SubstrateLink>& links() const { return links_; }

  // Adjacency is built over structurally valid links only, so it is safe to
  // use even while validate_instance would still report problems.
  const std::vector<Neighbor>& neighbors(int node) const { return adj_[node]; }
  int link_index(int a, int b) const;  // -1 when no such link
  long long total_capacity() const;

 private:
  std::vector<SubstrateNode> nodes_;
  std::vector<SubstrateLink> links_;
  std::vector<std::vector<Neighbor>> adj_;
  std::map<std::pair<int, int>, int> link_by_pair_;
};

struct Vnf {
  int id = 0;
  int demand = 0;
};

// bandwidth < 0 marks a missing demand entry.
struct VirtualLink {
  int a = 0;
  int b = 0;
  int bandwidth = 0;
};

struct SliceNeighbor {
  int index = 0;  // local VNF index within the slice
  int link = 0;   // index into links()
};

class Slice {
 public:
  Slice() = default;
  Slice(std::vector<Vnf> vnfs, std::vector<VirtualLink> links);

  int vnf_count() const { return static_cast<int>(vnfs_.size()); }
  const std::vector<Vnf>& vnfs() const { return vnfs_; }
  const std::vector<VirtualLink>& links() const { return links_; }
  const std::vector<SliceNeighbor>& neighbors(int index) const {
    return adj_[index];
  }

 private:
  std::vector<Vnf> vnfs_;
  std::vector<VirtualLink> links_;
  std::vector<std::vector<SliceNeighbor>> adj_;
};

struct SliceSet {
  std::vector<Slice> slices;

  int total_vnfs() const;
  std::vector<VnfId> all_vnfs() const;  // ascending (slice, index)
  bool contains(VnfId u) const;
  int demand(VnfId u) const;
  int degree(VnfId u) const;
  long long total_demand() const;
};

struct Instance {
  SubstrateNetwork substrate;
  SliceSet slices;
};

// Partial assignment of VNFs to substrate nodes. Mapping convergence (one
// node per VNF) holds by construction of the map.
struct MappingPlan {
  std::map<VnfId, int> assignments;

  bool contains(VnfId u) const { return assignments.count(u) != 0; }
  int host(VnfId u) const;  // -1 when unassigned
};

int objective(const MappingPlan& plan);

// A virtual link whose endpoints are both placed; hosts may coincide
// (co-location), in which case no substrate bandwidth is consumed.
struct EdgeMapping {
  VnfId u, v;
  int host_u = 0;
  int host_v = 0;
  int bandwidth = 0;
};

std::vector<EdgeMapping> derive_edge_mappings(const SliceSet& slices,
                                              const MappingPlan& plan);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

ValidationReport validate_instance(const SubstrateNetwork& substrate,
                                   const SliceSet& slices);
ValidationReport validate_plan(const SubstrateNetwork& substrate,
                               const SliceSet& slices,
                               const MappingPlan& plan);

// Remaining node resources and link bandwidth; indexed by node id / link
// index. Mutated only by the single solver run that owns it.
struct ResidualState {
  std::vector<int> node_residual;
  std::vector<int> link_residual;
};

ResidualState full_residual(const SubstrateNetwork& substrate);

struct InfeasiblePlanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws InfeasiblePlanError when any residual would go negative.
ResidualState residual_after(const SubstrateNetwork& substrate,
                             const SliceSet& slices, const MappingPlan& plan);

}  // namespace ranslice
