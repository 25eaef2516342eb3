#pragma once

#include <span>
#include <vector>

#include "contavg/ft/series.hpp"

namespace contavg::ft {

// Role of the Fourier variables of a field.
//   kTimePeriodic: they are time(s); the field has m components (one per
//                  Taylor variable) and time is not a phase coordinate.
//   kTorus:        they are phase angles x in T^n; the field has n + m
//                  components ordered (x_1..x_n, y_1..y_m) and the commutator
//                  differentiates along the angles too.
enum class PhaseKind { kTimePeriodic, kTorus };

class VectorFieldFT {
 public:
  VectorFieldFT() = default;
  explicit VectorFieldFT(SeriesShape shape,
                         PhaseKind kind = PhaseKind::kTimePeriodic);
  VectorFieldFT(std::vector<FourierTaylorSeries> components,
                PhaseKind kind = PhaseKind::kTimePeriodic);

  const SeriesShape& shape() const { return shape_; }
  PhaseKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(components_.size()); }
  // Number of leading angle components (0 for time-periodic fields).
  int angle_components() const {
    return kind_ == PhaseKind::kTorus ? shape_.n_freq : 0;
  }

  const FourierTaylorSeries& operator[](int i) const { return components_[i]; }
  FourierTaylorSeries& operator[](int i) { return components_[i]; }
  std::span<const FourierTaylorSeries> components() const { return components_; }

  VectorFieldFT& operator+=(const VectorFieldFT& other);
  VectorFieldFT& operator-=(const VectorFieldFT& other);
  VectorFieldFT& operator*=(double c);
  VectorFieldFT& add_scaled(double c, const VectorFieldFT& other);
  friend VectorFieldFT operator+(VectorFieldFT a, const VectorFieldFT& b) {
    return a += b;
  }
  friend VectorFieldFT operator-(VectorFieldFT a, const VectorFieldFT& b) {
    return a -= b;
  }
  friend VectorFieldFT operator*(VectorFieldFT a, double c) { return a *= c; }
  friend VectorFieldFT operator*(double c, VectorFieldFT a) { return a *= c; }

  // Component-wise versions of the series operations.
  template <class F>
  VectorFieldFT map(F&& f) const {
    std::vector<FourierTaylorSeries> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(f(c));
    return VectorFieldFT(std::move(out), kind_);
  }
  VectorFieldFT mean() const;
  VectorFieldFT oscillatory() const;
  bool is_zero() const;

  // Value at phase point z and time t. For kTimePeriodic, z has m entries and
  // t has n_freq; for kTorus, z = (x, y) has n + m entries and t is ignored.
  std::vector<Complex> evaluate(std::span<const Complex> z,
                                std::span<const Complex> t = {}) const;
  std::vector<double> evaluate_real(std::span<const double> z,
                                    std::span<const double> t = {}) const;

  WeightedNorm weighted_norm(const TruncationPolicy& policy) const;
  // Per stored Fourier mode, summed over components.
  double mode_norm(int stored_mode, double rho) const;
  VectorFieldFT truncated(const TruncationPolicy& policy,
                          double* dropped_mass = nullptr) const;

 private:
  SeriesShape shape_{};
  PhaseKind kind_ = PhaseKind::kTimePeriodic;
  std::vector<FourierTaylorSeries> components_;
};

// Derivative of w along v: (Dw) v, over every phase coordinate of the kind.
VectorFieldFT directional_derivative(const VectorFieldFT& v,
                                     const VectorFieldFT& w);
// [u1, u2] = (Du2) u1 - (Du1) u2, truncated to the common shape.
VectorFieldFT commutator(const VectorFieldFT& u1, const VectorFieldFT& u2);
// xi u: mode k times i sign<k, omega>.
VectorFieldFT hilbert_xi(const VectorFieldFT& u, std::span<const double> omega);
VectorFieldFT hilbert_xi(const VectorFieldFT& u);
// Time derivative (derivative along omega for torus fields).
VectorFieldFT d_dt(const VectorFieldFT& u, std::span<const double> omega);
VectorFieldFT d_dt(const VectorFieldFT& u);
// Divergence sum_j d u_j / d z_j.
FourierTaylorSeries divergence(const VectorFieldFT& u);

inline FourierTaylorSeries hilbert_xi(const FourierTaylorSeries& u) {
  const double one = 1.0;
  return u.hilbert(std::span<const double>(&one, 1));
}
inline FourierTaylorSeries d_dt(const FourierTaylorSeries& u) {
  const double one = 1.0;
  return u.derivative_along(std::span<const double>(&one, 1));
}

}  // namespace contavg::ft
