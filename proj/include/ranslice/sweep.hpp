#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ranslice/generator.hpp"
#include "ranslice/group.hpp"
#include "ranslice/model.hpp"
#include "ranslice/oracle.hpp"

// Experiment sweeps: one axis, several points, seeded paired trials, CSV/JSON
// reports over the two metrics (embedded count, remaining node resources).

namespace ranslice {

enum class SweepAxis { SubstrateNodes, VnfCount, SubstrateDegree, VnfDegree };

enum class Algorithm { Rba, Cba, Gcba, Gba, Exact };

const char* to_token(Algorithm alg);
Algorithm algorithm_from_token(const std::string& token);
const char* to_token(SweepAxis axis);
SweepAxis axis_from_token(const std::string& token);

struct SweepSpec {
  SweepAxis axis = SweepAxis::SubstrateNodes;
  std::vector<int> points;  // nonempty, ascending
  int trials_per_point = 1;
  GeneratorConfig base;
  std::vector<Algorithm> algorithms;
  int timing_repeats = 1;  // per-measurement repeats; the median is kept
};

std::string sweep_spec_to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const std::string& text);

// Stable child-seed derivation (splitmix64 chain over base, axis, point, trial).
std::uint64_t child_seed(std::uint64_t base_seed, SweepAxis axis, int point, int trial);

// Base config with the swept parameter pinned to the point value.
GeneratorConfig apply_axis(const GeneratorConfig& base, SweepAxis axis, int point);

struct TrialOutcome {
  int embedded = 0;
  long long remaining = 0;  // sum of node residuals after the run
  double ms = 0.0;          // median over timing_repeats
};

struct TrialRecord {
  int point = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::vector<TrialOutcome> outcomes;  // parallel to spec.algorithms
};

struct ReportRow {
  std::string axis;
  int point = 0;
  std::string algorithm;
  int trials = 0;
  double mean_embedded = 0.0;
  int min_embedded = 0;
  int max_embedded = 0;
  double mean_remaining_resources = 0.0;
  double mean_ms = 0.0;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<TrialRecord> trials;       // all points, trial-major within point
  std::vector<ReportRow> rows;           // one per (point, algorithm)
  std::vector<std::string> skipped;      // points dropped on InfeasibleConfig
};

// Every algorithm at a (point, trial) sees the same generated instance, and
// every plan is re-validated before aggregation. Trials run in parallel when
// jobs > 1; results are independent of the schedule.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

inline constexpr const char* kReportHeader =
    "axis,point,algorithm,trials,mean_embedded,min_embedded,max_embedded,"
    "mean_remaining_resources,mean_ms";

std::string emit_csv(const SweepResult& result);
std::string emit_json(const SweepResult& result);
std::vector<ReportRow> report_rows_from_json(const std::string& text);

// One-sided sign test: probability of at least `wins` successes out of
// wins + losses fair coin flips (ties excluded by the caller).
double sign_test_p(int wins, int losses);

}  // namespace ranslice
