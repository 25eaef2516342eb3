#include "contavg/oracle/benchmark.hpp"

#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "contavg/errors.hpp"

namespace contavg::oracle {
namespace {

using ft::Complex;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

std::vector<Complex> mode_value(const ft::VectorFieldFT& u, int k,
                                std::span<const Complex> z) {
  std::vector<Complex> out(u.dimension());
  const int kk[1] = {k};
  for (int c = 0; c < u.dimension(); ++c) out[c] = u[c].evaluate_mode(kk, z);
  return out;
}

}  // namespace

void BenchmarkFamily::validate() const {
  const int m = dimension();
  if (m == 0) throw ContractViolation("benchmark perturbation is empty");
  if (perturbation.kind() != ft::PhaseKind::kTimePeriodic ||
      perturbation.shape().n_freq != 1) {
    throw ContractViolation("benchmark perturbation must be 2pi-periodic in t");
  }
  if (!perturbation.mean().is_zero()) {
    throw ContractViolation("benchmark perturbation must have zero mean");
  }
  if (kind == BenchmarkKind::kLinear && (A.rows() != m || A.cols() != m)) {
    throw ContractViolation("benchmark matrix A must be m x m");
  }
  if (kind == BenchmarkKind::kRiccati && m != 1) {
    throw ContractViolation("the Riccati benchmark is scalar");
  }
}

ft::VectorFieldFT BenchmarkFamily::mean_field() const {
  validate();
  const auto& sh = perturbation.shape();
  ft::VectorFieldFT u(sh);
  if (kind == BenchmarkKind::kLinear) {
    std::vector<int> a(sh.m, 0);
    for (int i = 0; i < sh.m; ++i) {
      for (int j = 0; j < sh.m; ++j) {
        std::fill(a.begin(), a.end(), 0);
        a[j] = 1;
        const int k0[1] = {0};
        u[i].set_coeff(k0, a, A(i, j));
      }
    }
  } else if (kind == BenchmarkKind::kRiccati) {
    if (sh.N < 2) throw ContractViolation("the Riccati benchmark needs N >= 2");
    u[0].set_coeff(0, {2}, 1.0);
  }
  return u;
}

ft::VectorFieldFT BenchmarkFamily::initial_field(double eps) const {
  return (mean_field() + perturbation) * eps;
}

double singularity_bound(const BenchmarkFamily& family, std::span<const Complex> z,
                         double eps, int k) {
  const double inf = std::numeric_limits<double>::infinity();
  if (family.kind != BenchmarkKind::kRiccati || k == 0 || eps == 0.0 || z[0] == 0.0) {
    return inf;
  }
  // 1 - i eps sign(k) s z = 0  <=>  s = -i / (eps sign(k) z)
  const Complex s = Complex(0, -1) / (eps * (k > 0 ? 1.0 : -1.0) * z[0]);
  if (std::abs(s.imag()) > 1e-14 * std::abs(s) || s.real() <= 0.0) return inf;
  return s.real();
}

std::vector<Complex> explicit_solution(const BenchmarkFamily& family, int k,
                                       double eps, double s,
                                       std::span<const Complex> z, OracleMode mode) {
  family.validate();
  if (static_cast<int>(z.size()) != family.dimension()) {
    throw ContractViolation("point dimension differs from the benchmark");
  }
  if (!(s >= 0.0)) throw ContractViolation("s must be non-negative");
  if (s >= singularity_bound(family, z, eps, k)) {
    throw SingularFlowError("complex-time flow is singular before s");
  }
  const double sigma = k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0);
  const Complex zeta(0.0, eps * sigma * s);
  const double decay = std::exp(-std::abs(k) * s);
  std::vector<Complex> out;

  switch (family.kind) {
    case BenchmarkKind::kZero:
      out = mode_value(family.perturbation, k, z);
      break;
    case BenchmarkKind::kLinear: {
      const CMatrix G = (family.A.cast<Complex>() * zeta).exp();
      const CVector zz = Eigen::Map<const CVector>(z.data(), z.size());
      const CVector gz = G * zz;
      out = mode_value(family.perturbation, k, std::span<const Complex>(gz.data(), gz.size()));
      if (mode == OracleMode::kVectorField) {
        const CVector v = G.inverse() * Eigen::Map<CVector>(out.data(), out.size());
        out.assign(v.data(), v.data() + v.size());
      }
      break;
    }
    case BenchmarkKind::kRiccati: {
      const Complex den = 1.0 - zeta * z[0];
      if (std::abs(den) < 1e-300) throw SingularFlowError("Riccati flow is singular");
      const Complex gz[1] = {z[0] / den};
      out = mode_value(family.perturbation, k, gz);
      if (mode == OracleMode::kVectorField) out[0] *= den * den;
      break;
    }
  }
  for (auto& v : out) v *= decay;
  return out;
}

}  // namespace contavg::oracle
