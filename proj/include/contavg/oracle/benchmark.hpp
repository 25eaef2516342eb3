#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "contavg/ft/vector_field.hpp"

namespace contavg::oracle {

// Mean field whose flow g^zeta is known in closed form for complex zeta.
//   kZero     u0 = 0           g = identity
//   kLinear   u0 = A z         g = exp(A zeta) z
//   kRiccati  u0 = z^2 (m=1)   g = z / (1 - zeta z)
enum class BenchmarkKind { kZero, kLinear, kRiccati };

// How a mode is carried along g in the closed form
//   u^k(s) = e^{-|k| s} (g^{i eps sign(k) s})^* hat u^k.
//   kVectorField: pullback of a vector field, (Dg)^{-1} hat u^k(g(z)); this is
//                 the solution of the engine's linearized flow.
//   kFunction:    composition hat u^k(g(z)), the rule for scalar functions
//                 (and Hamiltonians).
enum class OracleMode { kVectorField, kFunction };

struct BenchmarkFamily {
  BenchmarkKind kind = BenchmarkKind::kZero;
  Eigen::MatrixXd A;  // kLinear only, m x m
  // Oscillatory modes hat u^k, 1 <= |k| <= K, as a time-periodic polynomial
  // field; its mean must vanish.
  ft::VectorFieldFT perturbation;

  int dimension() const { return perturbation.dimension(); }
  void validate() const;
  // Polynomial hat u^0 in the perturbation's shape.
  ft::VectorFieldFT mean_field() const;
  // eps (hat u^0 + perturbation), the engine's initial field.
  ft::VectorFieldFT initial_field(double eps) const;
};

// Value at z of mode k of v = u / eps after running the linearized flow to s.
// Throws SingularFlowError when s reaches singularity_bound.
std::vector<ft::Complex> explicit_solution(const BenchmarkFamily& family, int k,
                                           double eps, double s,
                                           std::span<const ft::Complex> z,
                                           OracleMode mode = OracleMode::kVectorField);

// Supremum of s >= 0 for which g^{i eps sign(k) s}(z) stays finite; infinity
// for the linear and zero kinds.
double singularity_bound(const BenchmarkFamily& family, std::span<const ft::Complex> z,
                         double eps, int k);

}  // namespace contavg::oracle
