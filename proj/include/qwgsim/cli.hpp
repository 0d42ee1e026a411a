#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qwgsim/comparison.hpp"

namespace qwgsim {

/// Edge-removal ensemble: every (metric, removal count, trial) compares the
/// base graph against a copy with that many edges removed.
struct ExperimentSpec {
  std::string base_id;
  Graph base;
  std::vector<std::size_t> removals;
  std::size_t trials = 1;
  std::vector<MetricKind> metrics{MetricKind::euclidean};
  CompareConfig compare;  // metric.kind is overridden per row
  std::uint64_t seed = 0;
  std::size_t workers = 0;  // 0 selects default_thread_count()
};

struct ExperimentRow {
  std::string base_id;
  MetricKind metric = MetricKind::euclidean;
  std::size_t removals = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double similarity = 0.0;
  std::size_t steps = 0;
  double runtime_ms = 0.0;
  bool skipped = false;  // removal count exceeded the edge count
};

/// Rows in canonical (metric, removals, trial) order.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

/// Seed driving trial `trial` at removal count `removals`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t removals, std::size_t trial);

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
/// Mean, min and max similarity per (metric, removals).
void write_summary_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
/// "runs.csv" -> "runs_summary.csv".
std::filesystem::path summary_path(const std::filesystem::path& out);

/// Graph source for experiments: anything load_graph accepts, or a generator
/// spec er:N:P, sf:N:M, uniform:N:E seeded with `seed`.
Graph resolve_graph_source(const std::string& source, std::uint64_t seed);

/// Entry point of the qwgsim command line. Returns the process exit code:
/// 0 on success, 2 on invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwgsim
