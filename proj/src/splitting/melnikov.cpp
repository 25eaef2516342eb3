#include "contavg/splitting/melnikov.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "contavg/errors.hpp"

namespace contavg::splitting {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTail = 40.0;

template <class F>
double composite_gauss(F f, double a, double b, int panels) {
  using boost::math::quadrature::gauss;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    sum += gauss<double, 20>::integrate(f, a + i * h, a + (i + 1) * h);
  }
  return sum;
}

}  // namespace

double SeparatrixOrbit::x(double tau) { return 4.0 * std::atan(std::exp(tau)); }
double SeparatrixOrbit::y(double tau) { return 2.0 / std::cosh(tau); }
double SeparatrixOrbit::sin_x(double tau) {
  return -2.0 * std::tanh(tau) / std::cosh(tau);
}
double SeparatrixOrbit::energy(double tau) {
  const double yy = y(tau);
  return 0.5 * yy * yy + std::cos(x(tau));
}

MelnikovIntegrals melnikov_integrals(double eps) {
  if (!(eps > 0.0)) throw ContractViolation("eps must be positive");
  auto g = [](double t) { return SeparatrixOrbit::y(t) * SeparatrixOrbit::sin_x(t); };
  // Panels resolve both the sech scale and the 2 pi eps oscillation.
  const int panels = static_cast<int>(std::ceil(2.0 * kTail / std::min(0.5, eps)));
  MelnikovIntegrals r;
  r.C = composite_gauss([&](double t) { return g(t) * std::cos(t / eps); }, -kTail, kTail, panels);
  r.S = composite_gauss([&](double t) { return g(t) * std::sin(t / eps); }, -kTail, kTail, panels);
  if (!std::isfinite(r.C) || !std::isfinite(r.S)) {
    throw ConvergenceError("Melnikov quadrature is not finite");
  }
  return r;
}

double melnikov_function(const PendulumParams& p, double tau0) {
  p.validate();
  const auto mi = melnikov_integrals(p.eps);
  return 2.0 * p.B * (mi.C * std::cos(tau0 / p.eps) - mi.S * std::sin(tau0 / p.eps));
}

double melnikov_lobe(const PendulumParams& p) {
  p.validate();
  if (p.B == 0.0) return 0.0;
  const auto mi = melnikov_integrals(p.eps);
  auto M = [&](double t0) {
    return 2.0 * p.B * (mi.C * std::cos(t0 / p.eps) - mi.S * std::sin(t0 / p.eps));
  };
  // Zeros of C cos(a) - S sin(a) sit at a = atan2(C, S) + j pi.
  const double a0 = p.eps * std::atan2(mi.C, mi.S);
  using boost::math::quadrature::gauss;
  return gauss<double, 30>::integrate([&](double t) { return std::abs(M(t)); }, a0,
                                      a0 + kPi * p.eps);
}

double melnikov_lobe_closed_form(const PendulumParams& p) {
  p.validate();
  const double e = p.eps;
  return 16.0 * kPi * p.B / e * std::exp(-kPi / (2.0 * e)) / -std::expm1(-kPi / e);
}

double paper_lobe_area(const PendulumParams& p) {
  p.validate();
  return 8.0 * kPi / p.eps * std::exp(-kPi / (2.0 * p.eps)) * 2.0 * p.B;
}

}  // namespace contavg::splitting
