#pragma once

#include <string>

#include "ranslice/generator.hpp"
#include "ranslice/model.hpp"

// JSON (de)serialization for instances, plans, and generator configs.
// Emission is byte-stable: fixed key order, 2-space indent, sorted entries.

namespace ranslice {

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string plan_to_json(const MappingPlan& plan);
MappingPlan plan_from_json(const std::string& text);

std::string config_to_json(const GeneratorConfig& config);
GeneratorConfig config_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ranslice
