#pragma once

namespace contavg::ft {

// Truncation and norm weights shared by series, fields and the engine.
//   K        Fourier cutoff (max |k_i|)
//   N        Taylor cutoff (max total degree)
//   drop_eps coefficients with smaller modulus are zeroed by truncate()
//   rho      polydisk radius weighting Taylor degree: rho^|a|
//   q        strip half-width weighting Fourier order: e^{q |k|_1}
struct TruncationPolicy {
  int K = 1;
  int N = 8;
  double drop_eps = 0.0;
  double rho = 1.0;
  double q = 0.0;

  // Throws ContractViolation naming the offending field.
  void validate() const;
};

}  // namespace contavg::ft
