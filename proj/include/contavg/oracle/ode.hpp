#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace contavg::oracle {

using State = std::vector<double>;
// dz = f(z, t)
using OdeRhs = std::function<void(const State& z, State& dz, double t)>;

struct OdeOptions {
  // Target global accuracy (absolute and relative to |z|); steps are
  // controlled at tol / 10.
  double tol = 1e-13;
  double initial_step = 0.0;  // 0: a fraction of the interval
  // Escape when some |z_i| exceeds this bound.
  double escape_bound = std::numeric_limits<double>::infinity();
  // Only the components [0, escape_components) are checked (all if < 0).
  int escape_components = -1;
  // Extra escape test on accepted states.
  std::function<bool(const State&)> escaped;
  long max_steps = 10'000'000;
};

struct OdeResult {
  State z;
  long steps = 0;
  long rejected = 0;
  // Max-norm difference against the same step sequence taken in halves
  // (filled by ode_integrate_verified only).
  double halving_difference = 0.0;
};

// Integrates from t0 to t1 (either direction) with adaptive Runge-Kutta-
// Fehlberg 7(8). Throws StepUnderflowError when the step collapses and
// OutOfDomainError when the trajectory escapes or becomes non-finite.
State ode_integrate(const OdeRhs& f, State z0, double t0, double t1,
                    const OdeOptions& opts = {});

OdeResult ode_integrate_full(const OdeRhs& f, State z0, double t0, double t1,
                             const OdeOptions& opts = {});

// As ode_integrate_full, then repeats the accepted step sequence with every
// step split in two and reports the difference as a global error estimate.
OdeResult ode_integrate_verified(const OdeRhs& f, State z0, double t0,
                                 double t1, const OdeOptions& opts = {});

}  // namespace contavg::oracle
