#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contavg/averaging/engine.hpp"
#include "contavg/ft/truncation.hpp"

namespace contavg::experiments {

enum class ExperimentKind { kE1, kE2, kE3, kE4 };

const char* experiment_name(ExperimentKind kind);

// Thresholds default to the acceptance values.
struct E1Settings {
  double c_target = 0.8;
  double rate_tolerance = 0.15;   // |alpha - c| / c
  double ratio_eps = 0.1;         // cell used for the remainder ratio
  double min_ratio = 1e3;         // remainder(s=0) / remainder(c/eps)
  bool check_k_doubling = true;
  double k_doubling_tolerance = 0.05;
};

struct E2Settings {
  double s0 = 0.1;
  double power = 2.0;
  double amplitude = 0.05;
  double envelope_rate = 0.09;
  double envelope_factor = 2.0;
};

struct E3Settings {
  std::vector<double> section_phases{0.0};
  double max_rel_err = 0.25;
  bool require_monotone = true;
  double slope_tolerance = 0.10;  // relative to pi/2
  double f0 = 2.0;
  double f0_tolerance = 0.20;
  double max_c1 = 3.0;
  double linearity_tolerance = 0.05;
  double section_tolerance = 0.01;
  double map_tol = 1e-13;
};

struct E4Settings {
  std::vector<double> omega{1.0, 1.6180339887498949};
  double alpha = 1.0;
  double q = 0.5;
  double mu = 1.0;
  double gamma = 1.0;
  double exponent_lo = 0.4;
  double exponent_hi = 0.6;
  double min_r2 = 0.98;
  int steps = 200;
};

struct ExperimentConfig {
  int schema_version = 1;
  ExperimentKind experiment = ExperimentKind::kE1;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency; CONTAVG_THREADS overrides
  std::string output_dir = "out";
  std::string output_name;  // default <experiment>.csv
  std::vector<double> eps;
  std::vector<double> B;
  ft::TruncationPolicy truncation;
  averaging::EngineConfig engine;
  E1Settings e1;
  E2Settings e2;
  E3Settings e3;
  E4Settings e4;

  std::string output_path() const;
};

// Parse and validate. Throws ConfigError naming the offending key.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
void validate(const ExperimentConfig& cfg);

// Worker count after the CONTAVG_THREADS override.
int effective_threads(const ExperimentConfig& cfg);

}  // namespace contavg::experiments
