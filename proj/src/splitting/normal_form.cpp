#include "contavg/splitting/normal_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "contavg/errors.hpp"

namespace contavg::splitting {

using ft::FourierTaylorSeries;
using ft::HamiltonianFT;

namespace {

FourierTaylorSeries unperturbed(ft::SeriesShape shape) {
  return FourierTaylorSeries::term(shape, 0, {0, 2}, 0.5) + ft::cos_series(shape, 0);
}

}  // namespace

HamiltonianFT pendulum_hamiltonian(const PendulumParams& p, ft::SeriesShape shape) {
  p.validate();
  if (shape.m != 2 || shape.n_freq != 1) {
    throw ContractViolation("pendulum Hamiltonian needs m = 2 and one time variable");
  }
  const FourierTaylorSeries cx = ft::cos_series(shape, 0);
  // 2B cos t cos x: coefficient B on e^{it} and its conjugate.
  FourierTaylorSeries h = unperturbed(shape) + FourierTaylorSeries::term(shape, 1, {0, 0}, p.B) * cx;
  h *= p.eps;
  return HamiltonianFT(std::move(h));
}

NormalFormResult normal_form_reduce(const PendulumParams& p, double c_target,
                                    const ft::TruncationPolicy& policy,
                                    const averaging::EngineConfig& config) {
  p.validate();
  policy.validate();
  if (!(c_target >= 0.0 && c_target < std::numbers::pi / 2)) {
    throw ContractViolation("c_target must lie in [0, pi/2)");
  }
  const ft::SeriesShape shape{1, 2, policy.K, policy.N};
  averaging::AveragingState st;
  st.eps = p.eps;
  st.field = pendulum_hamiltonian(p, shape);
  st.variant = averaging::FlowVariant::kNonautonomous;
  st.policy = policy;

  NormalFormResult out;
  out.s_target = averaging::stopping_parameter(c_target, p.eps);
  auto run = averaging::run_to(st, out.s_target, config);
  const auto& h = std::get<HamiltonianFT>(run.state.field);
  out.h0 = HamiltonianFT(unperturbed(shape));
  out.eps_h1 = h.mean() * (1.0 / p.eps) - out.h0;
  out.remainder = h.oscillatory() * (1.0 / p.eps);
  const auto n = out.remainder.weighted_norm(policy);
  out.remainder_bound = n.saturated ? std::numeric_limits<double>::max() : n.value;
  out.report = std::move(run.report);
  return out;
}

}  // namespace contavg::splitting
