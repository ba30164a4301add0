#include "ranslice/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "ranslice/heuristics.hpp"
#include "ranslice/io.hpp"

namespace ranslice {

using ordered_json = nlohmann::ordered_json;

const char* to_token(Algorithm alg) {
  switch (alg) {
    case Algorithm::Rba: return "rba";
    case Algorithm::Cba: return "cba";
    case Algorithm::Gcba: return "gcba";
    case Algorithm::Gba: return "gba";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

Algorithm algorithm_from_token(const std::string& token) {
  if (token == "rba") return Algorithm::Rba;
  if (token == "cba") return Algorithm::Cba;
  if (token == "gcba") return Algorithm::Gcba;
  if (token == "gba") return Algorithm::Gba;
  if (token == "exact") return Algorithm::Exact;
  throw std::runtime_error("unknown algorithm: " + token);
}

const char* to_token(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::SubstrateNodes: return "substrate_nodes";
    case SweepAxis::VnfCount: return "vnf_count";
    case SweepAxis::SubstrateDegree: return "substrate_degree";
    case SweepAxis::VnfDegree: return "vnf_degree";
  }
  return "?";
}

SweepAxis axis_from_token(const std::string& token) {
  if (token == "substrate_nodes") return SweepAxis::SubstrateNodes;
  if (token == "vnf_count") return SweepAxis::VnfCount;
  if (token == "substrate_degree") return SweepAxis::SubstrateDegree;
  if (token == "vnf_degree") return SweepAxis::VnfDegree;
  throw std::runtime_error("unknown sweep axis: " + token);
}

std::string sweep_spec_to_json(const SweepSpec& spec) {
  ordered_json doc;
  doc["axis"] = to_token(spec.axis);
  doc["points"] = spec.points;
  doc["trials_per_point"] = spec.trials_per_point;
  ordered_json algs = ordered_json::array();
  for (Algorithm a : spec.algorithms) algs.push_back(to_token(a));
  doc["algorithms"] = algs;
  doc["timing_repeats"] = spec.timing_repeats;
  doc["base"] = ordered_json::parse(config_to_json(spec.base));
  return doc.dump(2) + "\n";
}

SweepSpec sweep_spec_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  SweepSpec spec;
  spec.axis = axis_from_token(doc.at("axis").get<std::string>());
  spec.points = doc.at("points").get<std::vector<int>>();
  spec.trials_per_point = doc.value("trials_per_point", 1);
  for (const auto& j : doc.at("algorithms"))
    spec.algorithms.push_back(algorithm_from_token(j.get<std::string>()));
  spec.timing_repeats = doc.value("timing_repeats", 1);
  if (doc.contains("base")) spec.base = config_from_json(doc.at("base").dump());
  return spec;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t child_seed(std::uint64_t base_seed, SweepAxis axis, int point, int trial) {
  std::uint64_t x = splitmix64(base_seed ^ (static_cast<std::uint64_t>(axis) + 1));
  x = splitmix64(x ^ static_cast<std::uint64_t>(point));
  x = splitmix64(x ^ static_cast<std::uint64_t>(trial));
  return x;
}

GeneratorConfig apply_axis(const GeneratorConfig& base, SweepAxis axis, int point) {
  GeneratorConfig cfg = base;
  switch (axis) {
    case SweepAxis::SubstrateNodes:
      cfg.n_substrate = {point, point};
      break;
    case SweepAxis::VnfCount:
      cfg.total_vnfs = point;
      break;
    case SweepAxis::SubstrateDegree:
      cfg.substrate_degree = point;
      break;
    case SweepAxis::VnfDegree:
      cfg.vnf_degree = point;
      break;
  }
  return cfg;
}

namespace {

void validate_spec(const SweepSpec& spec) {
  if (spec.points.empty()) throw std::invalid_argument("sweep needs at least one point");
  if (!std::is_sorted(spec.points.begin(), spec.points.end()))
    throw std::invalid_argument("sweep points must be ascending");
  if (spec.trials_per_point < 1) throw std::invalid_argument("trials_per_point must be >= 1");
  if (spec.timing_repeats < 1) throw std::invalid_argument("timing_repeats must be >= 1");
  if (spec.algorithms.empty()) throw std::invalid_argument("sweep needs at least one algorithm");
  bool wants_exact =
      std::count(spec.algorithms.begin(), spec.algorithms.end(), Algorithm::Exact) > 0;
  if (wants_exact) {
    OracleBudget budget;
    int max_nodes = spec.base.n_substrate.hi;
    long long max_vnfs = spec.base.total_vnfs > 0
                             ? spec.base.total_vnfs
                             : static_cast<long long>(spec.base.n_slices.hi) *
                                   spec.base.vnfs_per_slice.hi;
    for (int p : spec.points) {
      if (spec.axis == SweepAxis::SubstrateNodes) max_nodes = std::max(max_nodes, p);
      if (spec.axis == SweepAxis::VnfCount) max_vnfs = std::max<long long>(max_vnfs, p);
    }
    if (max_nodes > budget.max_nodes || max_vnfs > budget.max_vnfs)
      throw std::invalid_argument("exact oracle requested but the sweep exceeds its budget");
  }
}

SolveOutput run_algorithm(Algorithm alg, const Instance& instance) {
  switch (alg) {
    case Algorithm::Rba: return solve_rba(instance.substrate, instance.slices);
    case Algorithm::Cba: return solve_cba(instance.substrate, instance.slices);
    case Algorithm::Gcba: return solve_gcba(instance.substrate, instance.slices);
    case Algorithm::Gba: return solve_gba(instance.substrate, instance.slices);
    case Algorithm::Exact: {
      OracleResult r = solve_exact(instance.substrate, instance.slices);
      return {r.plan, residual_after(instance.substrate, instance.slices, r.plan)};
    }
  }
  throw std::logic_error("unreachable");
}

struct TaskResult {
  bool infeasible = false;
  std::string error;
  TrialRecord record;
};

TaskResult run_trial(const SweepSpec& spec, int point, int trial) {
  TaskResult result;
  result.record.point = point;
  result.record.trial = trial;
  result.record.seed = child_seed(spec.base.seed, spec.axis, point, trial);

  GeneratorConfig cfg = apply_axis(spec.base, spec.axis, point);
  cfg.seed = result.record.seed;
  Instance instance;
  try {
    instance = generate(cfg);
  } catch (const InfeasibleConfigError& e) {
    result.infeasible = true;
    result.error = e.what();
    return result;
  }

  for (Algorithm alg : spec.algorithms) {
    std::vector<double> times;
    times.reserve(spec.timing_repeats);
    SolveOutput out;
    for (int rep = 0; rep < spec.timing_repeats; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      out = run_algorithm(alg, instance);
      auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    double median = times[times.size() / 2];

    ValidationReport report = validate_plan(instance.substrate, instance.slices, out.plan);
    if (!report.ok())
      throw std::logic_error("solver " + std::string(to_token(alg)) +
                             " produced an infeasible plan: " + report.violations.front());

    long long remaining = 0;
    for (int r : out.residual.node_residual) remaining += r;
    // Independent conservation cross-check, without touching ResidualState.
    long long embedded_demand = 0;
    for (const auto& [u, host] : out.plan.assignments)
      embedded_demand += instance.slices.demand(u);
    if (remaining != instance.substrate.total_capacity() - embedded_demand)
      throw std::logic_error("residual accounting out of balance");

    result.record.outcomes.push_back({objective(out.plan), remaining, median});
  }
  return result;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  validate_spec(spec);
  SweepResult result;
  result.spec = spec;

  struct Task {
    int point;
    int trial;
  };
  std::vector<Task> tasks;
  for (int point : spec.points)
    for (int trial = 0; trial < spec.trials_per_point; ++trial)
      tasks.push_back({point, trial});

  std::vector<TaskResult> outcomes(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      outcomes[i] = run_trial(spec, tasks[i].point, tasks[i].trial);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          outcomes[i] = run_trial(spec, tasks[i].point, tasks[i].trial);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    int n_threads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Aggregate per point; a point with any infeasible trial is skipped whole.
  std::size_t cursor = 0;
  for (int point : spec.points) {
    std::vector<TaskResult*> at_point;
    for (int trial = 0; trial < spec.trials_per_point; ++trial)
      at_point.push_back(&outcomes[cursor++]);

    auto bad = std::find_if(at_point.begin(), at_point.end(),
                            [](TaskResult* t) { return t->infeasible; });
    if (bad != at_point.end()) {
      result.skipped.push_back("point " + std::to_string(point) +
                               " skipped: " + (*bad)->error);
      continue;
    }
    for (TaskResult* t : at_point) result.trials.push_back(t->record);

    for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
      ReportRow row;
      row.axis = to_token(spec.axis);
      row.point = point;
      row.algorithm = to_token(spec.algorithms[ai]);
      row.trials = static_cast<int>(at_point.size());
      long long sum_embedded = 0;
      long long sum_remaining = 0;
      double sum_ms = 0.0;
      row.min_embedded = at_point.front()->record.outcomes[ai].embedded;
      row.max_embedded = row.min_embedded;
      for (TaskResult* t : at_point) {
        const TrialOutcome& o = t->record.outcomes[ai];
        sum_embedded += o.embedded;
        sum_remaining += o.remaining;
        sum_ms += o.ms;
        row.min_embedded = std::min(row.min_embedded, o.embedded);
        row.max_embedded = std::max(row.max_embedded, o.embedded);
      }
      row.mean_embedded = static_cast<double>(sum_embedded) / row.trials;
      row.mean_remaining_resources = static_cast<double>(sum_remaining) / row.trials;
      row.mean_ms = sum_ms / row.trials;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

namespace {

std::string fmt(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

}  // namespace

std::string emit_csv(const SweepResult& result) {
  std::string out = kReportHeader;
  out += "\n";
  for (const auto& row : result.rows) {
    out += row.axis + "," + std::to_string(row.point) + "," + row.algorithm + "," +
           std::to_string(row.trials) + "," + fmt(row.mean_embedded, 4) + "," +
           std::to_string(row.min_embedded) + "," + std::to_string(row.max_embedded) +
           "," + fmt(row.mean_remaining_resources, 4) + "," + fmt(row.mean_ms, 3) + "\n";
  }
  return out;
}

std::string emit_json(const SweepResult& result) {
  ordered_json doc = ordered_json::array();
  for (const auto& row : result.rows) {
    ordered_json j;
    j["axis"] = row.axis;
    j["point"] = row.point;
    j["algorithm"] = row.algorithm;
    j["trials"] = row.trials;
    j["mean_embedded"] = row.mean_embedded;
    j["min_embedded"] = row.min_embedded;
    j["max_embedded"] = row.max_embedded;
    j["mean_remaining_resources"] = row.mean_remaining_resources;
    j["mean_ms"] = row.mean_ms;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<ReportRow> report_rows_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  std::vector<ReportRow> rows;
  for (const auto& j : doc) {
    ReportRow row;
    row.axis = j.at("axis").get<std::string>();
    row.point = j.at("point").get<int>();
    row.algorithm = j.at("algorithm").get<std::string>();
    row.trials = j.at("trials").get<int>();
    row.mean_embedded = j.at("mean_embedded").get<double>();
    row.min_embedded = j.at("min_embedded").get<int>();
    row.max_embedded = j.at("max_embedded").get<int>();
    row.mean_remaining_resources = j.at("mean_remaining_resources").get<double>();
    row.mean_ms = j.at("mean_ms").get<double>();
    rows.push_back(std::move(row));
  }
  return rows;
}

double sign_test_p(int wins, int losses) {
  const int n = wins + losses;
  if (n == 0) return 1.0;
  double p = 0.0;
  for (int i = wins; i <= n; ++i) {
    double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                      std::lgamma(n - i + 1.0) - n * std::log(2.0);
    p += std::exp(log_term);
  }
  return std::min(1.0, p);
}

}  // namespace ranslice
