#include "contavg/splitting/pendulum.hpp"

#include <cmath>
#include <numbers>

#include "contavg/errors.hpp"
#include "contavg/oracle/ode.hpp"

namespace contavg::splitting {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

oracle::OdeOptions ode_options(const MapOptions& m) {
  oracle::OdeOptions o;
  o.tol = m.tol;
  const double ymax = m.escape_y;
  o.escaped = [ymax](const oracle::State& z) { return std::abs(z[1]) > ymax; };
  return o;
}

Point flow(const PendulumParams& p, Point z, double t0, double t1,
           const MapOptions& m) {
  const double e = p.eps, b2 = 2.0 * p.B;
  auto rhs = [e, b2](const oracle::State& s, oracle::State& ds, double t) {
    ds[0] = e * s[1];
    ds[1] = e * (1.0 + b2 * std::cos(t)) * std::sin(s[0]);
  };
  const auto out = oracle::ode_integrate(rhs, {z[0], z[1]}, t0, t1, ode_options(m));
  return {out[0], out[1]};
}

}  // namespace

void PendulumParams::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw ContractViolation("eps must lie in (0, 1)");
  if (!(B >= 0.0) || !std::isfinite(B)) throw ContractViolation("B must be >= 0");
}

Point poincare_map(const PendulumParams& p, Point z, double t0, const MapOptions& opts) {
  p.validate();
  return flow(p, z, t0, t0 + kTwoPi, opts);
}

Point poincare_map_inverse(const PendulumParams& p, Point z, double t0,
                           const MapOptions& opts) {
  p.validate();
  return flow(p, z, t0, t0 - kTwoPi, opts);
}

Point iterate_map(const PendulumParams& p, Point z, double t0, int n,
                  const MapOptions& opts) {
  for (int i = 0; i < std::abs(n); ++i) {
    z = n > 0 ? poincare_map(p, z, t0, opts) : poincare_map_inverse(p, z, t0, opts);
  }
  return z;
}

MapJacobian poincare_map_jacobian(const PendulumParams& p, Point z, double t0,
                                  const MapOptions& opts) {
  p.validate();
  const double e = p.eps, b2 = 2.0 * p.B;
  // (x, y, J00, J01, J10, J11) with J' = Df J
  auto rhs = [e, b2](const oracle::State& s, oracle::State& ds, double t) {
    const double f = e * (1.0 + b2 * std::cos(t));
    ds[0] = e * s[1];
    ds[1] = f * std::sin(s[0]);
    const double c = f * std::cos(s[0]);
    ds[2] = e * s[4];
    ds[3] = e * s[5];
    ds[4] = c * s[2];
    ds[5] = c * s[3];
  };
  const auto out = oracle::ode_integrate(rhs, {z[0], z[1], 1.0, 0.0, 0.0, 1.0}, t0,
                                         t0 + kTwoPi, ode_options(opts));
  MapJacobian r;
  r.image = {out[0], out[1]};
  r.jacobian << out[2], out[3], out[4], out[5];
  return r;
}

FixedPoint hyperbolic_fixed_point(const PendulumParams& p, double t0,
                                  const MapOptions& opts) {
  p.validate();
  if (p.B > 0.2) throw ContractViolation("B <= 0.2 required for the fixed point");
  FixedPoint fp;
  Point z{0.0, 0.0};
  MapJacobian mj = poincare_map_jacobian(p, z, t0, opts);
  for (int it = 0; it <= 50; ++it) {
    const Eigen::Vector2d r(mj.image[0] - z[0], mj.image[1] - z[1]);
    fp.residual = r.lpNorm<Eigen::Infinity>();
    fp.iterations = it;
    if (fp.residual <= 1e-12) break;
    if (it == 50) throw ConvergenceError("fixed point Newton did not converge");
    const Eigen::Vector2d dz =
        (mj.jacobian - Eigen::Matrix2d::Identity()).partialPivLu().solve(-r);
    z = {z[0] + dz[0], z[1] + dz[1]};
    mj = poincare_map_jacobian(p, z, t0, opts);
  }
  fp.point = z;

  Eigen::EigenSolver<Eigen::Matrix2d> es(mj.jacobian);
  const auto ev = es.eigenvalues();
  if (std::abs(ev[0].imag()) > 0.0 || std::abs(ev[1].imag()) > 0.0) {
    throw ConvergenceError("fixed point is not hyperbolic");
  }
  const int iu = ev[0].real() > ev[1].real() ? 0 : 1;
  fp.lambda_u = ev[iu].real();
  fp.lambda_s = ev[1 - iu].real();
  if (!(fp.lambda_u > 1.0 && fp.lambda_s < 1.0)) {
    throw ConvergenceError("fixed point is not hyperbolic");
  }
  auto unit = [](Eigen::Vector2d v) {
    v.normalize();
    return v[1] < 0.0 ? Eigen::Vector2d(-v) : v;
  };
  fp.v_u = unit(es.eigenvectors().col(iu).real());
  fp.v_s = unit(es.eigenvectors().col(1 - iu).real());
  return fp;
}

double pendulum_energy(Point z) { return 0.5 * z[1] * z[1] + std::cos(z[0]); }

}  // namespace contavg::splitting
