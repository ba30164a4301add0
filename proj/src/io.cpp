#include "ranslice/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ranslice {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  ordered_json jnodes = ordered_json::array();
  for (const auto& node : instance.substrate.nodes())
    jnodes.push_back({{"id", node.id}, {"capacity", node.capacity}});
  ordered_json jlinks = ordered_json::array();
  for (const auto& link : instance.substrate.links())
    jlinks.push_back({{"a", link.a}, {"b", link.b}, {"capacity", link.capacity}});
  doc["substrate"] = {{"nodes", jnodes}, {"links", jlinks}};

  ordered_json jslices = ordered_json::array();
  for (const auto& slice : instance.slices.slices) {
    ordered_json jvnfs = ordered_json::array();
    for (const auto& vnf : slice.vnfs())
      jvnfs.push_back({{"id", vnf.id}, {"demand", vnf.demand}});
    ordered_json jvlinks = ordered_json::array();
    for (const auto& link : slice.links())
      jvlinks.push_back({{"a", link.a}, {"b", link.b}, {"bandwidth", link.bandwidth}});
    jslices.push_back({{"vnfs", jvnfs}, {"links", jvlinks}});
  }
  doc["slices"] = jslices;
  return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);

  std::vector<SubstrateNode> nodes;
  for (const auto& j : doc.at("substrate").at("nodes"))
    nodes.push_back({j.at("id").get<int>(), j.value("capacity", -1)});
  std::vector<SubstrateLink> links;
  for (const auto& j : doc.at("substrate").at("links"))
    links.push_back({j.at("a").get<int>(), j.at("b").get<int>(), j.value("capacity", -1)});

  SliceSet slices;
  for (const auto& js : doc.at("slices")) {
    std::vector<Vnf> vnfs;
    for (const auto& j : js.at("vnfs"))
      vnfs.push_back({j.at("id").get<int>(), j.value("demand", -1)});
    std::vector<VirtualLink> vlinks;
    for (const auto& j : js.value("links", ordered_json::array()))
      vlinks.push_back({j.at("a").get<int>(), j.at("b").get<int>(), j.value("bandwidth", -1)});
    slices.slices.emplace_back(std::move(vnfs), std::move(vlinks));
  }
  return {SubstrateNetwork(std::move(nodes), std::move(links)), std::move(slices)};
}

std::string plan_to_json(const MappingPlan& plan) {
  ordered_json doc = ordered_json::array();
  for (const auto& [vnf, node] : plan.assignments)
    doc.push_back({{"slice", vnf.slice}, {"vnf", vnf.index}, {"node", node}});
  return doc.dump(2) + "\n";
}

MappingPlan plan_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  MappingPlan plan;
  for (const auto& j : doc) {
    VnfId id{j.at("slice").get<int>(), j.at("vnf").get<int>()};
    if (!plan.assignments.emplace(id, j.at("node").get<int>()).second)
      throw std::runtime_error("duplicate plan entry for vnf " + to_string(id));
  }
  return plan;
}

namespace {

ordered_json range_to_json(Range r) { return ordered_json::array({r.lo, r.hi}); }

Range range_from_json(const ordered_json& j) {
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

ordered_json degree_to_json(int degree) {
  if (degree == kRandomDegree) return "random";
  return degree;
}

int degree_from_json(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "random")
      throw std::runtime_error("bad degree value: " + j.get<std::string>());
    return kRandomDegree;
  }
  return j.get<int>();
}

const char* regime_token(Regime regime) {
  switch (regime) {
    case Regime::Normal: return "normal";
    case Regime::Shortage: return "shortage";
    default: return "custom";
  }
}

Regime regime_from_token(const std::string& token) {
  if (token == "normal") return Regime::Normal;
  if (token == "shortage") return Regime::Shortage;
  if (token == "custom") return Regime::Custom;
  throw std::runtime_error("unknown regime: " + token);
}

}  // namespace

std::string config_to_json(const GeneratorConfig& config) {
  ordered_json doc;
  doc["seed"] = config.seed;
  doc["regime"] = regime_token(config.regime);
  doc["n_substrate"] = range_to_json(config.n_substrate);
  doc["node_capacity"] = range_to_json(config.node_capacity);
  doc["n_slices"] = range_to_json(config.n_slices);
  doc["vnfs_per_slice"] = range_to_json(config.vnfs_per_slice);
  doc["substrate_degree"] = degree_to_json(config.substrate_degree);
  doc["vnf_degree"] = degree_to_json(config.vnf_degree);
  doc["link_capacity"] = range_to_json(config.link_capacity);
  doc["bandwidth_demand"] = range_to_json(config.bandwidth_demand);
  doc["vnf_demand"] = range_to_json(config.vnf_demand);
  doc["total_vnfs"] = config.total_vnfs;
  return doc.dump(2) + "\n";
}

GeneratorConfig config_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  GeneratorConfig base;
  // Regime presets fill anything the document leaves out.
  if (doc.contains("regime")) {
    Regime regime = regime_from_token(doc.at("regime").get<std::string>());
    if (regime == Regime::Normal) base = normal_config(0);
    if (regime == Regime::Shortage) base = shortage_config(0);
    base.regime = regime;
  }
  if (doc.contains("seed")) base.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("n_substrate")) base.n_substrate = range_from_json(doc.at("n_substrate"));
  if (doc.contains("node_capacity"))
    base.node_capacity = range_from_json(doc.at("node_capacity"));
  if (doc.contains("n_slices")) base.n_slices = range_from_json(doc.at("n_slices"));
  if (doc.contains("vnfs_per_slice"))
    base.vnfs_per_slice = range_from_json(doc.at("vnfs_per_slice"));
  if (doc.contains("substrate_degree"))
    base.substrate_degree = degree_from_json(doc.at("substrate_degree"));
  if (doc.contains("vnf_degree")) base.vnf_degree = degree_from_json(doc.at("vnf_degree"));
  if (doc.contains("link_capacity"))
    base.link_capacity = range_from_json(doc.at("link_capacity"));
  if (doc.contains("bandwidth_demand"))
    base.bandwidth_demand = range_from_json(doc.at("bandwidth_demand"));
  if (doc.contains("vnf_demand")) base.vnf_demand = range_from_json(doc.at("vnf_demand"));
  if (doc.contains("total_vnfs")) base.total_vnfs = doc.at("total_vnfs").get<int>();
  return base;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ranslice
