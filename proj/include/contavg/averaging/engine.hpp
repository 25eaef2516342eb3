#pragma once

#include <string>
#include <variant>
#include <vector>

#include "contavg/errors.hpp"
#include "contavg/ft/hamiltonian.hpp"
#include "contavg/ft/vector_field.hpp"

namespace contavg::averaging {

// Which right-hand side drives the evolution in s.
//   kAutonomous     u_s = -[xi u, u]
//   kNonautonomous  u_s = (xi u)_t - [xi u, u]
//   kLinearized     mode k: u^k_s = -|k| u^k + i sign(k) [u^0, u^k]; the mean
//                   u^0 is frozen (the nonautonomous flow without the
//                   convolution of nonzero modes)
// Hamiltonian fields use the same flows written with Poisson brackets,
// H_s = (xi H)_t + {xi H, H}, which J grad maps onto the vector form.
// The small parameter is carried inside the coefficients (u = eps * v).
enum class FlowVariant { kAutonomous, kNonautonomous, kLinearized };

enum class StepScheme {
  kRk4,
  // Lawson RK4: the stiff mode decay e^{-|<k,omega>| ds} is applied exactly.
  kIntegratingFactorRk4,
};

using Field = std::variant<ft::VectorFieldFT, ft::HamiltonianFT>;

struct AveragingState {
  double s = 0.0;
  double eps = 0.0;
  Field field;
  FlowVariant variant = FlowVariant::kNonautonomous;
  ft::TruncationPolicy policy;
  // Frequencies defining xi = i sign<k, omega> and the time derivative.
  std::vector<double> omega{1.0};

  bool is_hamiltonian() const {
    return std::holds_alternative<ft::HamiltonianFT>(field);
  }
  // Field as a vector field (J grad H in Hamiltonian mode).
  ft::VectorFieldFT vector_field() const;
  // Throws ContractViolation on an inconsistent state.
  void validate() const;
};

struct EngineConfig {
  double ds = 0.0;  // 0 selects default_step(policy)
  StepScheme scheme = StepScheme::kRk4;
  // Blow-up when the weighted norm exceeds this multiple of the initial one.
  double blowup_factor = 1e6;
  int record_every = 1;
  bool record_snapshots = false;

  // min(0.01, 0.1 / K); RK4 needs ds * K below about 2.7 for the -|k| decay.
  static double default_step(const ft::TruncationPolicy& policy);
};

struct StepRecord {
  double s = 0.0;
  double ds = 0.0;
  double dropped_mass = 0.0;
  // Weighted norm per Fourier order: stored mode k for a single frequency,
  // l1 shell |k|_1 for several.
  std::vector<double> mode_norms;
};

struct RunReport {
  std::vector<StepRecord> steps;
  double total_dropped_mass = 0.0;
  int coefficient_count = 0;

  // Columns s,k,weighted_mode_norm,dropped_mass.
  std::string to_csv() const;
  void write_csv(const std::string& path) const;
};

// Samples of the generator f = xi u and of df/ds on the integrator's s-grid,
// for the coordinate change dZ/ds = f(Z, t, s).
struct GeneratorPath {
  std::vector<double> s;
  std::vector<ft::VectorFieldFT> generator;
  std::vector<ft::VectorFieldFT> rate;

  bool empty() const { return s.empty(); }
  double final_s() const { return s.empty() ? 0.0 : s.back(); }
};

struct RunResult {
  AveragingState state;
  RunReport report;
  GeneratorPath path;
};

class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, AveragingState last_finite)
      : Error(what), last_state_(std::move(last_finite)) {}
  const AveragingState& last_state() const { return last_state_; }
  double s_reached() const { return last_state_.s; }

 private:
  AveragingState last_state_;
};

// du/ds for the state's variant, exactly truncated to the state's shape.
Field rhs(const AveragingState& state);

// One step of size ds >= 0; the result is truncated with the state's policy.
AveragingState step(const AveragingState& state, double ds,
                    StepScheme scheme = StepScheme::kRk4,
                    double* dropped_mass = nullptr);

// Steps from state.s to s_target (the last step is shortened to land exactly).
// Throws BlowUpError carrying the last finite state when the weighted norm
// exceeds blowup_factor times its initial value or becomes non-finite.
RunResult run_to(const AveragingState& state, double s_target,
                 const EngineConfig& config = {});

// s = alpha / eps, the parameter at which the averaging change is taken.
double stopping_parameter(double alpha, double eps);

// Weighted norm of the time-dependent part (field minus its k = 0 mode).
double remainder_norm(const AveragingState& state,
                      const ft::TruncationPolicy& policy);

}  // namespace contavg::averaging
