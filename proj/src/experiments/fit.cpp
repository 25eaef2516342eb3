#include "contavg/experiments/fit.hpp"

#include <gsl/gsl_fit.h>

#include <cmath>
#include <vector>

#include "contavg/errors.hpp"

namespace contavg::experiments {

FitResult fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ContractViolation("fit: x and y differ in length");
  if (x.size() < 4) throw ContractViolation("fit: needs at least 4 points");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw ContractViolation("fit: non-finite data");
    }
  }
  const std::size_t n = x.size();
  double c0 = 0, c1 = 0, cov00 = 0, cov01 = 0, cov11 = 0, sumsq = 0;
  gsl_fit_linear(x.data(), 1, y.data(), 1, n, &c0, &c1, &cov00, &cov01, &cov11, &sumsq);

  double mean = 0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(n);
  double tss = 0;
  for (double v : y) tss += (v - mean) * (v - mean);

  FitResult r;
  r.a = c0;
  r.b = c1;
  r.se_a = std::sqrt(cov00);
  r.se_b = std::sqrt(cov11);
  r.r2 = tss > 0 ? 1.0 - sumsq / tss : 1.0;
  r.n = static_cast<int>(n);
  return r;
}

FitResult fit_log_linear(std::span<const double> x, std::span<const double> y) {
  std::vector<double> ly(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0)) throw ContractViolation("fit: log of a non-positive value");
    ly[i] = std::log(y[i]);
  }
  return fit_linear(x, ly);
}

}  // namespace contavg::experiments
