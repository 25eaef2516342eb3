#pragma once

#include <span>

namespace contavg::experiments {

// Ordinary least squares for y = a + b x.
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double se_a = 0.0;
  double se_b = 0.0;
  double r2 = 0.0;
  int n = 0;
};

// Throws ContractViolation for fewer than 4 points, mismatched lengths or
// non-finite data.
FitResult fit_linear(std::span<const double> x, std::span<const double> y);

// Fits log(y) = a + b x; every y must be positive.
FitResult fit_log_linear(std::span<const double> x, std::span<const double> y);

}  // namespace contavg::experiments
