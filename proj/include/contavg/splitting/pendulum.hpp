#pragma once

#include <array>

#include <Eigen/Dense>

namespace contavg::splitting {

using Point = std::array<double, 2>;

// H = eps (y^2/2 + (1 + 2B cos t) cos x), i.e.
//   x' = eps y,  y' = eps (1 + 2B cos t) sin x.
struct PendulumParams {
  double eps = 0.2;
  double B = 0.0;

  // eps in (0, 1), B >= 0.
  void validate() const;
};

struct MapOptions {
  double tol = 1e-13;
  double escape_y = 10.0;
};

// Time-2pi flow from phase t0 (inverse: from t0 back to t0 - 2pi).
Point poincare_map(const PendulumParams& p, Point z, double t0,
                   const MapOptions& opts = {});
Point poincare_map_inverse(const PendulumParams& p, Point z, double t0,
                           const MapOptions& opts = {});
// n-fold iterate; negative n iterates the inverse.
Point iterate_map(const PendulumParams& p, Point z, double t0, int n,
                  const MapOptions& opts = {});

struct MapJacobian {
  Point image;
  Eigen::Matrix2d jacobian;
};
// Map and its derivative from the variational equations.
MapJacobian poincare_map_jacobian(const PendulumParams& p, Point z, double t0,
                                  const MapOptions& opts = {});

struct FixedPoint {
  Point point;
  double residual = 0.0;
  int iterations = 0;
  double lambda_u = 1.0;  // > 1
  double lambda_s = 1.0;  // < 1
  // Unit eigenvectors oriented with positive y component: at B = 0 they are
  // (1, 1)/sqrt2 and (-1, 1)/sqrt2.
  Eigen::Vector2d v_u;
  Eigen::Vector2d v_s;
};

// Newton on P(z) = z from (0, 0). Requires B <= 0.2; throws
// ConvergenceError after 50 iterations.
FixedPoint hyperbolic_fixed_point(const PendulumParams& p, double t0,
                                  const MapOptions& opts = {});

// y^2/2 + cos x
double pendulum_energy(Point z);

}  // namespace contavg::splitting
