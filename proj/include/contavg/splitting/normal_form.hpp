#pragma once

#include <string>

#include "contavg/averaging/engine.hpp"
#include "contavg/ft/hamiltonian.hpp"
#include "contavg/splitting/pendulum.hpp"

namespace contavg::splitting {

// eps (y^2/2 + (1 + 2B cos t) cos x) as a Fourier-Taylor series about the
// hyperbolic point (0, 0), cos x truncated at the shape's degree.
ft::HamiltonianFT pendulum_hamiltonian(const PendulumParams& p, ft::SeriesShape shape);

// H(s) = eps (H0 + eps H1 + e^{-c/eps} H2) at s = c / eps.
struct NormalFormResult {
  ft::HamiltonianFT h0;         // y^2/2 + cos x
  ft::HamiltonianFT eps_h1;     // mean(H(s)) / eps - H0
  ft::HamiltonianFT remainder;  // oscillatory part of H(s) / eps
  // Weighted norm of `remainder` under the policy (DBL_MAX on overflow).
  double remainder_bound = 0.0;
  double s_target = 0.0;
  averaging::RunReport report;
};

// Runs the Hamiltonian averaging flow on the forced pendulum to s = c/eps.
// Requires 0 <= c_target < pi/2. Engine blow-up propagates as BlowUpError,
// which carries the s reached.
NormalFormResult normal_form_reduce(const PendulumParams& p, double c_target,
                                    const ft::TruncationPolicy& policy,
                                    const averaging::EngineConfig& config = {});

}  // namespace contavg::splitting
