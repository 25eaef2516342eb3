#include "contavg/oracle/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "contavg/errors.hpp"

namespace contavg::oracle {
namespace {

namespace odeint = boost::numeric::odeint;
using Stepper = odeint::runge_kutta_fehlberg78<State>;

void check_state(const State& z, const OdeOptions& o, double t) {
  const std::size_t n =
      o.escape_components < 0 ? z.size()
                              : std::min(z.size(), static_cast<std::size_t>(o.escape_components));
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z[i])) {
      throw OutOfDomainError("trajectory became non-finite at t = " + std::to_string(t));
    }
    if (i < n && std::abs(z[i]) > o.escape_bound) {
      throw OutOfDomainError("trajectory escaped at t = " + std::to_string(t));
    }
  }
  if (o.escaped && o.escaped(z)) {
    throw OutOfDomainError("trajectory escaped at t = " + std::to_string(t));
  }
}

OdeResult integrate(const OdeRhs& f, State z, double t0, double t1,
                    const OdeOptions& o, std::vector<double>* steps_taken) {
  if (!(o.tol > 0.0)) throw ContractViolation("ode tolerance must be positive");
  OdeResult res;
  check_state(z, o, t0);
  if (t1 == t0) {
    res.z = std::move(z);
    return res;
  }
  auto sys = [&f](const State& x, State& dx, double t) { f(x, dx, t); };
  // Local tolerance a decade below the requested global accuracy.
  const double local = std::max(0.1 * o.tol, 5e-16);
  auto stepper = odeint::make_controlled(local, local, Stepper());
  const double dir = t1 > t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double dt = dir * (o.initial_step > 0.0 ? o.initial_step : span / 64.0);
  double t = t0;
  while (dir * (t1 - t) > 0.0) {
    if (res.steps + res.rejected >= o.max_steps) {
      throw StepUnderflowError("ode step budget exhausted");
    }
    const bool last = std::abs(dt) >= std::abs(t1 - t);
    if (last) dt = t1 - t;
    const double t_before = t;
    const auto r = stepper.try_step(sys, z, t, dt);
    if (r == odeint::success) {
      ++res.steps;
      if (last) t = t1;  // land exactly
      if (steps_taken) steps_taken->push_back(t - t_before);
      check_state(z, o, t);
    } else {
      ++res.rejected;
      if (std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t))) {
        throw StepUnderflowError("ode step underflow at t = " + std::to_string(t));
      }
    }
  }
  res.z = std::move(z);
  return res;
}

}  // namespace

State ode_integrate(const OdeRhs& f, State z0, double t0, double t1,
                    const OdeOptions& opts) {
  return integrate(f, std::move(z0), t0, t1, opts, nullptr).z;
}

OdeResult ode_integrate_full(const OdeRhs& f, State z0, double t0, double t1,
                             const OdeOptions& opts) {
  return integrate(f, std::move(z0), t0, t1, opts, nullptr);
}

OdeResult ode_integrate_verified(const OdeRhs& f, State z0, double t0,
                                 double t1, const OdeOptions& opts) {
  std::vector<double> steps;
  State x = z0;
  OdeResult res = integrate(f, std::move(z0), t0, t1, opts, &steps);
  Stepper plain;
  auto sys = [&f](const State& s, State& ds, double t) { f(s, ds, t); };
  double t = t0;
  for (double h : steps) {
    plain.do_step(sys, x, t, 0.5 * h);
    plain.do_step(sys, x, t + 0.5 * h, 0.5 * h);
    t += h;
  }
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - res.z[i]));
  res.halving_difference = d;
  return res;
}

}  // namespace contavg::oracle
