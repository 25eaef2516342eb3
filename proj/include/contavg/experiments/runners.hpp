#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "contavg/experiments/config.hpp"
#include "contavg/experiments/csv.hpp"
#include "contavg/experiments/fit.hpp"

namespace contavg::experiments {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentOutcome {
  ExperimentKind kind = ExperimentKind::kE1;
  Table table;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, FitResult>> fits;
  // Reported quantities that are not asserted.
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> notes;

  bool passed() const;
  const Check* check(const std::string& name) const;
  const FitResult* fit(const std::string& name) const;
  double value(const std::string& name) const;  // NaN when absent
  std::string summary_json() const;
  std::string summary_text() const;
};

ExperimentOutcome run_e1(const ExperimentConfig& cfg);
ExperimentOutcome run_e2(const ExperimentConfig& cfg);
ExperimentOutcome run_e3(const ExperimentConfig& cfg);
ExperimentOutcome run_e4(const ExperimentConfig& cfg);
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

// Runs the experiment and writes the table to cfg.output_path() and the
// checks, fits and values to the same path with ".summary.json" appended.
ExperimentOutcome run_and_write(const ExperimentConfig& cfg);

// Calls fn(i) for i in [0, n) on `threads` workers. Exceptions are rethrown
// on the caller's thread (the one with the lowest index wins).
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace contavg::experiments
