#include "contavg/averaging/engine.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace contavg::averaging {
namespace {

using ft::FourierTaylorSeries;
using ft::HamiltonianFT;
using ft::VectorFieldFT;

// Flow algebra for both field representations: lie(a, b) is the action
// that appears as +lie(xi u, u) in the right-hand side.
VectorFieldFT xi(const VectorFieldFT& u, std::span<const double> w) {
  return ft::hilbert_xi(u, w);
}
HamiltonianFT xi(const HamiltonianFT& h, std::span<const double> w) {
  return HamiltonianFT(h.h().hilbert(w));
}
VectorFieldFT ddt(const VectorFieldFT& u, std::span<const double> w) {
  return ft::d_dt(u, w);
}
HamiltonianFT ddt(const HamiltonianFT& h, std::span<const double> w) {
  return HamiltonianFT(h.h().derivative_along(w));
}
VectorFieldFT lie(const VectorFieldFT& a, const VectorFieldFT& b) {
  return ft::commutator(a, b) * -1.0;
}
HamiltonianFT lie(const HamiltonianFT& a, const HamiltonianFT& b) {
  return ft::poisson_bracket(a, b);
}
VectorFieldFT as_field(const VectorFieldFT& u) { return u; }
VectorFieldFT as_field(const HamiltonianFT& h) {
  return ft::hamiltonian_to_field(h);
}

std::vector<const FourierTaylorSeries*> series_of(const Field& f) {
  std::vector<const FourierTaylorSeries*> out;
  if (const auto* h = std::get_if<HamiltonianFT>(&f)) {
    out.push_back(&h->h());
  } else {
    for (const auto& c : std::get<VectorFieldFT>(f).components()) {
      out.push_back(&c);
    }
  }
  return out;
}

const ft::SeriesShape& shape_of(const Field& f) {
  return std::visit([](const auto& v) -> const ft::SeriesShape& {
    return v.shape();
  }, f);
}

double norm_of(const Field& f, const ft::TruncationPolicy& p) {
  const ft::WeightedNorm n =
      std::visit([&](const auto& v) { return v.weighted_norm(p); }, f);
  return n.saturated ? std::numeric_limits<double>::infinity() : n.value;
}

double mode_rate(std::span<const int> k, std::span<const double> omega) {
  double d = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) d += k[j] * omega[j];
  return -std::abs(d);
}

bool has_linear_part(FlowVariant v) { return v != FlowVariant::kAutonomous; }

template <class T>
T full_rhs(const T& u, FlowVariant variant, std::span<const double> omega) {
  const T g = xi(u, omega);
  switch (variant) {
    case FlowVariant::kAutonomous:
      return lie(g, u);
    case FlowVariant::kNonautonomous:
      return ddt(g, omega) + lie(g, u);
    case FlowVariant::kLinearized:
      return ddt(g, omega) + lie(g, u.mean());
  }
  return u;
}

// Right-hand side without the diagonal decay -|<k,omega>| u^k.
template <class T>
T nonlinear_rhs(const T& u, FlowVariant variant, std::span<const double> omega) {
  const T g = xi(u, omega);
  if (variant == FlowVariant::kLinearized) return lie(g, u.mean());
  return lie(g, u);
}

FourierTaylorSeries decay(const FourierTaylorSeries& s,
                          std::span<const double> omega, double h) {
  return s.scale_modes(
      [&](std::span<const int> k) { return std::exp(mode_rate(k, omega) * h); });
}
VectorFieldFT decay(const VectorFieldFT& u, std::span<const double> omega,
                    double h) {
  return u.map([&](const FourierTaylorSeries& s) { return decay(s, omega, h); });
}
HamiltonianFT decay(const HamiltonianFT& u, std::span<const double> omega,
                    double h) {
  return HamiltonianFT(decay(u.h(), omega, h));
}

template <class T>
T rk4(const T& u, double h, FlowVariant v, std::span<const double> w) {
  const T k1 = full_rhs(u, v, w);
  const T k2 = full_rhs(T(u).add_scaled(0.5 * h, k1), v, w);
  const T k3 = full_rhs(T(u).add_scaled(0.5 * h, k2), v, w);
  const T k4 = full_rhs(T(u).add_scaled(h, k3), v, w);
  T out(u);
  out.add_scaled(h / 6.0, k1);
  out.add_scaled(h / 3.0, k2);
  out.add_scaled(h / 3.0, k3);
  out.add_scaled(h / 6.0, k4);
  return out;
}

template <class T>
T lawson_rk4(const T& u, double h, FlowVariant v, std::span<const double> w) {
  if (!has_linear_part(v)) return rk4(u, h, v, w);
  const T k1 = nonlinear_rhs(u, v, w);
  const T u_half = decay(u, w, 0.5 * h);
  const T k2 = nonlinear_rhs(decay(T(u).add_scaled(0.5 * h, k1), w, 0.5 * h), v, w);
  const T k3 = nonlinear_rhs(T(u_half).add_scaled(0.5 * h, k2), v, w);
  const T k4 = nonlinear_rhs(decay(u, w, h).add_scaled(h, decay(k3, w, 0.5 * h)), v, w);
  T out = decay(T(u).add_scaled(h / 6.0, k1), w, h);
  out.add_scaled(h / 3.0, decay(k2 + k3, w, 0.5 * h));
  out.add_scaled(h / 6.0, k4);
  return out;
}

StepRecord make_record(const AveragingState& st, double ds, double dropped) {
  StepRecord r;
  r.s = st.s;
  r.ds = ds;
  r.dropped_mass = dropped;
  const auto& shape = shape_of(st.field);
  const auto parts = series_of(st.field);
  const auto& fi = parts.front()->fourier();
  const int shells = shape.n_freq == 1 ? shape.K + 1 : shape.n_freq * shape.K + 1;
  r.mode_norms.assign(static_cast<std::size_t>(shells), 0.0);
  for (int i = 0; i < fi.stored_size(); ++i) {
    const int l1 = fi.l1(i);
    const int bin = shape.n_freq == 1 ? fi.mode(i)[0] : l1;
    double v = 0.0;
    for (const auto* s : parts) v += s->mode_norm(i, st.policy.rho);
    r.mode_norms[bin] += v * std::exp(st.policy.q * l1);
  }
  return r;
}

}  // namespace

ft::VectorFieldFT AveragingState::vector_field() const {
  return std::visit([](const auto& v) { return as_field(v); }, field);
}

void AveragingState::validate() const {
  policy.validate();
  const auto& shape = shape_of(field);
  if (shape.K != policy.K || shape.N != policy.N) {
    throw ContractViolation("field shape (K, N) differs from the policy");
  }
  if (static_cast<int>(omega.size()) != shape.n_freq) {
    throw ContractViolation("omega must have one entry per Fourier variable");
  }
  for (double w : omega) {
    if (!std::isfinite(w)) throw ContractViolation("omega must be finite");
  }
  const auto& fi = *ft::FourierIndex::get(shape.n_freq, shape.K);
  for (int i = 1; i < fi.stored_size(); ++i) {
    if (std::abs(mode_rate(fi.mode(i), omega)) < 1e-14) {
      throw ContractViolation("omega is resonant inside the Fourier box");
    }
  }
  if (!std::isfinite(s) || !std::isfinite(eps)) {
    throw ContractViolation("s and eps must be finite");
  }
}

double EngineConfig::default_step(const ft::TruncationPolicy& policy) {
  return std::min(0.01, 0.1 / policy.K);
}

std::string RunReport::to_csv() const {
  std::ostringstream os;
  os << "s,k,weighted_mode_norm,dropped_mass\n";
  char buf[128];
  for (const auto& r : steps) {
    for (std::size_t k = 0; k < r.mode_norms.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g,%.17g\n", r.s, k,
                    r.mode_norms[k], r.dropped_mass);
      os << buf;
    }
  }
  return os.str();
}

void RunReport::write_csv(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << to_csv();
}

Field rhs(const AveragingState& state) {
  return std::visit(
      [&](const auto& u) -> Field { return full_rhs(u, state.variant, state.omega); },
      state.field);
}

AveragingState step(const AveragingState& state, double ds, StepScheme scheme,
                    double* dropped_mass) {
  if (!(ds >= 0.0) || !std::isfinite(ds)) {
    throw ContractViolation("step size must be finite and non-negative");
  }
  AveragingState out = state;
  double dropped = 0.0;
  out.field = std::visit(
      [&](const auto& u) -> Field {
        auto next = scheme == StepScheme::kRk4
                        ? rk4(u, ds, state.variant, state.omega)
                        : lawson_rk4(u, ds, state.variant, state.omega);
        if constexpr (std::is_same_v<std::decay_t<decltype(u)>, HamiltonianFT>) {
          return HamiltonianFT(next.h().truncated(state.policy, &dropped));
        } else {
          return next.truncated(state.policy, &dropped);
        }
      },
      state.field);
  out.s = state.s + ds;
  if (dropped_mass) *dropped_mass = dropped;
  return out;
}

RunResult run_to(const AveragingState& initial, double s_target,
                 const EngineConfig& config) {
  initial.validate();
  if (!(s_target >= initial.s)) {
    throw ContractViolation("s_target must not precede the initial s");
  }
  if (config.record_every < 1) {
    throw ContractViolation("record_every must be positive");
  }
  const double ds = config.ds > 0.0 ? config.ds : EngineConfig::default_step(initial.policy);
  const double w0 = norm_of(initial.field, initial.policy);
  const double limit = config.blowup_factor * std::max(w0, 1e-300);

  RunResult res;
  res.state = initial;
  res.report.steps.push_back(make_record(initial, 0.0, 0.0));

  auto snapshot = [&](const AveragingState& st) {
    const Field r = rhs(st);
    std::visit(
        [&](const auto& u, const auto& du) {
          using T = std::decay_t<decltype(u)>;
          if constexpr (std::is_same_v<T, std::decay_t<decltype(du)>>) {
            res.path.s.push_back(st.s);
            res.path.generator.push_back(as_field(xi(u, st.omega)));
            res.path.rate.push_back(as_field(xi(du, st.omega)));
          }
        },
        st.field, r);
  };
  if (config.record_snapshots) snapshot(res.state);

  const long n_steps =
      std::max(0L, static_cast<long>(std::ceil((s_target - initial.s) / ds - 1e-9)));
  for (long i = 0; i < n_steps; ++i) {
    const double h = (i + 1 == n_steps) ? s_target - res.state.s : ds;
    double dropped = 0.0;
    AveragingState next = step(res.state, h, config.scheme, &dropped);
    if (i + 1 == n_steps) next.s = s_target;
    const double w = norm_of(next.field, next.policy);
    if (!std::isfinite(w) || w > limit) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "averaging flow blew up near s = %.6g (norm %.3g, initial %.3g)",
                    next.s, w, w0);
      throw BlowUpError(buf, res.state);
    }
    res.state = std::move(next);
    res.report.total_dropped_mass += dropped;
    if ((i + 1) % config.record_every == 0 || i + 1 == n_steps) {
      res.report.steps.push_back(make_record(res.state, h, dropped));
    }
    if (config.record_snapshots) snapshot(res.state);
  }
  for (const auto* s : series_of(res.state.field)) {
    for (int i = 0; i < s->stored_modes(); ++i) {
      for (const auto& c : s->mode(i)) res.report.coefficient_count += c != 0.0;
    }
  }
  return res;
}

double stopping_parameter(double alpha, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("eps must be positive");
  if (!(alpha >= 0.0)) throw ContractViolation("alpha must be non-negative");
  return alpha / eps;
}

double remainder_norm(const AveragingState& state,
                      const ft::TruncationPolicy& policy) {
  const Field osc =
      std::visit([](const auto& u) -> Field { return u.oscillatory(); }, state.field);
  const double n = norm_of(osc, policy);
  return std::isfinite(n) ? n : std::numeric_limits<double>::max();
}

}  // namespace contavg::averaging
