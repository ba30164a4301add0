#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ranslice/generator.hpp"
#include "ranslice/group.hpp"
#include "ranslice/heuristics.hpp"
#include "ranslice/io.hpp"
#include "ranslice/model.hpp"
#include "ranslice/oracle.hpp"
#include "ranslice/sweep.hpp"

namespace {

using namespace ranslice;

Instance load_valid_instance(const std::string& path) {
  Instance instance = instance_from_json(read_file(path));
  ValidationReport report = validate_instance(instance.substrate, instance.slices);
  if (!report.ok())
    throw std::runtime_error("invalid instance " + path + ":\n" + report.joined());
  return instance;
}

GroupOptions group_options(const std::string& negative_rule) {
  GroupOptions opts;
  if (negative_rule == "most-negative")
    opts.negative_rule = NegativeRule::MostNegative;
  return opts;
}

int run_generate(std::uint64_t seed, const std::string& regime, int k, int k_prime,
                 int total_vnfs, const std::string& out_path) {
  GeneratorConfig cfg;
  if (regime == "normal")
    cfg = normal_config(seed);
  else if (regime == "shortage")
    cfg = shortage_config(seed);
  else
    cfg.seed = seed;
  if (k >= 0) cfg.substrate_degree = k;
  if (k_prime >= 0) cfg.vnf_degree = k_prime;
  if (total_vnfs > 0) cfg.total_vnfs = total_vnfs;

  Instance instance = generate(cfg);
  write_file(out_path, instance_to_json(instance));
  std::cout << "wrote " << out_path << " nodes=" << instance.substrate.node_count()
            << " slices=" << instance.slices.slices.size()
            << " vnfs=" << instance.slices.total_vnfs() << "\n";
  return 0;
}

int run_solve(const std::string& alg, const std::string& in_path,
              const std::string& out_path, const std::string& negative_rule) {
  Instance instance = load_valid_instance(in_path);
  SolveOutput out;
  if (alg == "rba") {
    out = solve_rba(instance.substrate, instance.slices);
  } else if (alg == "cba") {
    out = solve_cba(instance.substrate, instance.slices);
  } else if (alg == "gcba") {
    out = solve_gcba(instance.substrate, instance.slices, group_options(negative_rule));
  } else if (alg == "gba") {
    out = solve_gba(instance.substrate, instance.slices, group_options(negative_rule));
  } else if (alg == "exact") {
    OracleResult r = solve_exact(instance.substrate, instance.slices);
    out.plan = r.plan;
    out.residual = residual_after(instance.substrate, instance.slices, r.plan);
    if (!r.optimal) std::cout << "note: expansion budget hit, count may be suboptimal\n";
  } else {
    throw std::runtime_error("unknown algorithm: " + alg);
  }

  long long remaining = 0;
  for (int r : out.residual.node_residual) remaining += r;
  std::cout << "algorithm=" << alg << " embedded=" << objective(out.plan)
            << " remaining_resources=" << remaining << "\n";
  if (!out_path.empty()) write_file(out_path, plan_to_json(out.plan));
  return 0;
}

int run_validate(const std::string& in_path, const std::string& plan_path) {
  Instance instance = instance_from_json(read_file(in_path));
  ValidationReport inst_report = validate_instance(instance.substrate, instance.slices);
  if (!inst_report.ok()) {
    std::cout << inst_report.joined();
    return 1;
  }
  MappingPlan plan = plan_from_json(read_file(plan_path));
  ValidationReport report = validate_plan(instance.substrate, instance.slices, plan);
  if (!report.ok()) {
    std::cout << report.joined();
    return 1;
  }
  std::cout << "ok: feasible plan, embedded=" << objective(plan) << "\n";
  return 0;
}

int run_sweep_cmd(const std::string& spec_path, const std::string& out_path,
                  std::string format, int jobs, std::int64_t seed_override) {
  SweepSpec spec = sweep_spec_from_json(read_file(spec_path));
  if (seed_override >= 0) spec.base.seed = static_cast<std::uint64_t>(seed_override);
  if (jobs < 1) jobs = 1;
  SweepResult result = run_sweep(spec, jobs);
  for (const auto& note : result.skipped) std::cerr << note << "\n";
  std::string doc = format == "json" ? emit_json(result) : emit_csv(result);
  if (out_path.empty())
    std::cout << doc;
  else
    write_file(out_path, doc);
  return 0;
}

int run_compare(const std::string& in_path, const std::string& negative_rule) {
  Instance instance = load_valid_instance(in_path);
  GroupOptions opts = group_options(negative_rule);
  std::cout << "rba=" << objective(solve_rba(instance.substrate, instance.slices).plan)
            << "\n";
  std::cout << "cba=" << objective(solve_cba(instance.substrate, instance.slices).plan)
            << "\n";
  std::cout << "gcba="
            << objective(solve_gcba(instance.substrate, instance.slices, opts).plan) << "\n";
  std::cout << "gba="
            << objective(solve_gba(instance.substrate, instance.slices, opts).plan) << "\n";
  if (fits_budget(instance.substrate, instance.slices)) {
    OracleResult r = solve_exact(instance.substrate, instance.slices);
    std::cout << "exact=" << objective(r.plan) << (r.optimal ? "" : " (budget hit)")
              << "\n";
  } else {
    std::cout << "exact=skipped (over budget)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice embedding solvers and experiment harness"};
  app.require_subcommand(1);

  // generate
  std::uint64_t seed = 0;
  std::string regime = "custom";
  int k = -1, k_prime = -1, total_vnfs = 0;
  std::string out_path;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a random instance file");
  generate_cmd->add_option("--seed", seed, "RNG seed");
  generate_cmd->add_option("--regime", regime, "normal|shortage|custom")
      ->check(CLI::IsMember({"normal", "shortage", "custom"}));
  generate_cmd->add_option("--k", k, "fixed substrate node degree");
  generate_cmd->add_option("--k-prime", k_prime, "fixed VNF degree");
  generate_cmd->add_option("--total-vnfs", total_vnfs, "fixed total VNF count");
  generate_cmd->add_option("-o,--output", out_path, "instance file to write")->required();

  // solve
  std::string alg, in_path, plan_out, negative_rule = "closest-to-zero";
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance");
  solve_cmd->add_option("--alg", alg, "rba|cba|gcba|gba|exact")
      ->required()
      ->check(CLI::IsMember({"rba", "cba", "gcba", "gba", "exact"}));
  solve_cmd->add_option("-i,--instance", in_path, "instance file")->required();
  solve_cmd->add_option("-o,--output", plan_out, "plan file to write");
  solve_cmd->add_option("--negative-rule", negative_rule,
                        "group tie rule when all differences are negative")
      ->check(CLI::IsMember({"closest-to-zero", "most-negative"}));

  // validate
  std::string val_instance, val_plan;
  auto* validate_cmd = app.add_subcommand("validate", "Check a plan against an instance");
  validate_cmd->add_option("-i,--instance", val_instance, "instance file")->required();
  validate_cmd->add_option("-p,--plan", val_plan, "plan file")->required();

  // sweep
  std::string spec_path, report_path, format = "csv";
  int jobs = 1;
  std::int64_t seed_override = -1;
  if (const char* env = std::getenv("RANSLICE_JOBS")) jobs = std::atoi(env);
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment sweep from a spec file");
  sweep_cmd->add_option("--spec", spec_path, "sweep spec file")->required();
  sweep_cmd->add_option("-o,--output", report_path, "report file (stdout when omitted)");
  sweep_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--jobs", jobs, "parallel trials (or env RANSLICE_JOBS)");
  sweep_cmd->add_option("--seed", seed_override, "override the base seed");

  // compare
  std::string cmp_instance;
  auto* compare_cmd =
      app.add_subcommand("compare", "Run all heuristics (and the oracle when in budget)");
  compare_cmd->add_option("-i,--instance", cmp_instance, "instance file")->required();
  compare_cmd->add_option("--negative-rule", negative_rule,
                          "group tie rule when all differences are negative")
      ->check(CLI::IsMember({"closest-to-zero", "most-negative"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate_cmd->parsed())
      return run_generate(seed, regime, k, k_prime, total_vnfs, out_path);
    if (solve_cmd->parsed()) return run_solve(alg, in_path, plan_out, negative_rule);
    if (validate_cmd->parsed()) return run_validate(val_instance, val_plan);
    if (sweep_cmd->parsed())
      return run_sweep_cmd(spec_path, report_path, format, jobs, seed_override);
    if (compare_cmd->parsed()) return run_compare(cmp_instance, negative_rule);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
