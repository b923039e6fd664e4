#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostd/synth.hpp"

namespace ostd {

enum class Method { ortho, whiten };

Method method_from_string(std::string_view s);
std::string to_string(Method m);

/// A Monte Carlo sweep: `instances` random problem instances, `runs`
/// decomposition runs per instance. Noise (if any) is drawn once per
/// instance; runs vary only the slice coefficients (and the projection when
/// randomize is set). Seeds are derived per (instance, run) with
/// derive_seed, so results are independent of `jobs` and of execution
/// order.
struct ExperimentConfig {
  Family family = Family::orthogonal;
  int order = 3;
  int dim = 4;
  int rank = 2;
  double eta = 0.0;
  int instances = 100;
  int runs = 10;
  std::uint64_t seed = 0;
  Method method = Method::ortho;
  bool randomize = false;
  int max_psd_attempts = 100;
  double tol = 1e-10;
  int jobs = 1;
  bool timings = false;  // emit wall_time_ms values in the CSV
};

struct RunRecord {
  int instance_id = 0;
  int run_id = 0;
  bool failed = false;  // whitening found no p.s.d. slice mix
  std::optional<int> predicted_rank;
  std::optional<double> rel_error;
  std::optional<double> score;
  std::optional<int> psd_attempts;  // whiten method only
  double wall_time_ms = 0.0;
};

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

/// One row of the summary: how many runs met the criterion, how many
/// instances had at least one such run, and the mean of the underlying
/// metric over the runs where it is defined.
struct MetricSummary {
  std::string label;
  long runs_meeting = 0;
  long instances_with_any = 0;
  double mean = 0.0;  // NaN when no run defines the metric
  int mean_precision = 4;
};

std::vector<MetricSummary> summarize(const ExperimentConfig& cfg,
                                     const std::vector<RunRecord>& records);

/// Fixed columns: instance_id,run_id,predicted_rank,rel_error,score,
/// psd_attempts,failed,wall_time_ms. Absent values are empty; wall_time_ms
/// is empty unless `timings` so that output bytes depend only on the
/// configuration and seed.
std::string to_csv(const std::vector<RunRecord>& records, bool timings);

std::string format_summary(const std::vector<MetricSummary>& rows,
                           long total_runs, long total_instances);

}  // namespace ostd
