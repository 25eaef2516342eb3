#include "contavg/ft/vector_field.hpp"

#include <cfloat>
#include <cmath>

#include "contavg/errors.hpp"

namespace contavg::ft {

namespace {

int component_count(SeriesShape shape, PhaseKind kind) {
  return kind == PhaseKind::kTorus ? shape.n_freq + shape.m : shape.m;
}

void require_compatible(const VectorFieldFT& a, const VectorFieldFT& b,
                        const char* what) {
  if (!(a.shape() == b.shape()) || a.kind() != b.kind() ||
      a.dimension() != b.dimension()) {
    throw ContractViolation(std::string(what) + ": field dimensions differ");
  }
}

}  // namespace

VectorFieldFT::VectorFieldFT(SeriesShape shape, PhaseKind kind)
    : shape_(shape), kind_(kind) {
  components_.assign(static_cast<std::size_t>(component_count(shape, kind)),
                     FourierTaylorSeries(shape));
}

VectorFieldFT::VectorFieldFT(std::vector<FourierTaylorSeries> components,
                             PhaseKind kind)
    : kind_(kind), components_(std::move(components)) {
  if (components_.empty()) {
    throw ContractViolation("VectorFieldFT: at least one component required");
  }
  shape_ = components_.front().shape();
  for (const auto& c : components_) {
    if (!(c.shape() == shape_)) {
      throw ContractViolation("VectorFieldFT: components have different shapes");
    }
  }
  if (dimension() != component_count(shape_, kind_)) {
    throw ContractViolation("VectorFieldFT: component count does not match phase dimension");
  }
}

VectorFieldFT& VectorFieldFT::operator+=(const VectorFieldFT& other) {
  require_compatible(*this, other, "operator+=");
  for (int i = 0; i < dimension(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorFieldFT& VectorFieldFT::operator-=(const VectorFieldFT& other) {
  require_compatible(*this, other, "operator-=");
  for (int i = 0; i < dimension(); ++i) components_[i] -= other.components_[i];
  return *this;
}

VectorFieldFT& VectorFieldFT::operator*=(double c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

VectorFieldFT& VectorFieldFT::add_scaled(double c, const VectorFieldFT& other) {
  require_compatible(*this, other, "add_scaled");
  for (int i = 0; i < dimension(); ++i) components_[i].add_scaled(c, other.components_[i]);
  return *this;
}

VectorFieldFT VectorFieldFT::mean() const {
  return map([](const FourierTaylorSeries& s) { return s.mean(); });
}

VectorFieldFT VectorFieldFT::oscillatory() const {
  return map([](const FourierTaylorSeries& s) { return s.oscillatory(); });
}

bool VectorFieldFT::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<Complex> VectorFieldFT::evaluate(std::span<const Complex> z,
                                             std::span<const Complex> t) const {
  std::vector<Complex> out(components_.size());
  if (kind_ == PhaseKind::kTorus) {
    if (static_cast<int>(z.size()) != shape_.n_freq + shape_.m) {
      throw ContractViolation("VectorFieldFT::evaluate: point has wrong dimension");
    }
    auto angles = z.first(static_cast<std::size_t>(shape_.n_freq));
    auto y = z.subspan(static_cast<std::size_t>(shape_.n_freq));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = components_[i].evaluate(y, angles);
  } else {
    if (static_cast<int>(z.size()) != shape_.m ||
        static_cast<int>(t.size()) != shape_.n_freq) {
      throw ContractViolation("VectorFieldFT::evaluate: point or time has wrong dimension");
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = components_[i].evaluate(z, t);
  }
  return out;
}

std::vector<double> VectorFieldFT::evaluate_real(std::span<const double> z,
                                                 std::span<const double> t) const {
  std::vector<Complex> zc(z.begin(), z.end());
  std::vector<Complex> tc(t.begin(), t.end());
  const auto v = evaluate(zc, tc);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

WeightedNorm VectorFieldFT::weighted_norm(const TruncationPolicy& policy) const {
  WeightedNorm out;
  for (const auto& c : components_) {
    const auto n = c.weighted_norm(policy);
    out.value += n.value;
    out.saturated = out.saturated || n.saturated;
  }
  if (out.saturated || !std::isfinite(out.value)) {
    out.value = DBL_MAX;
    out.saturated = true;
  }
  return out;
}

double VectorFieldFT::mode_norm(int stored_mode, double rho) const {
  double sum = 0.0;
  for (const auto& c : components_) sum += c.mode_norm(stored_mode, rho);
  return sum;
}

VectorFieldFT VectorFieldFT::truncated(const TruncationPolicy& policy,
                                       double* dropped_mass) const {
  double total = 0.0;
  std::vector<FourierTaylorSeries> out;
  out.reserve(components_.size());
  for (const auto& c : components_) {
    double dropped = 0.0;
    out.push_back(c.truncated(policy, &dropped));
    total += dropped;
  }
  if (dropped_mass != nullptr) *dropped_mass = total;
  return VectorFieldFT(std::move(out), kind_);
}

VectorFieldFT directional_derivative(const VectorFieldFT& v,
                                     const VectorFieldFT& w) {
  require_compatible(v, w, "directional_derivative");
  const int n_angles = v.angle_components();
  VectorFieldFT out(v.shape(), v.kind());
  for (int j = 0; j < v.dimension(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < w.dimension(); ++i) {
      if (w[i].is_zero()) continue;
      const FourierTaylorSeries dw = j < n_angles
                                         ? w[i].fourier_derivative(j)
                                         : w[i].taylor_derivative(j - n_angles);
      out[i].add_product(1.0, v[j], dw);
    }
  }
  return out;
}

VectorFieldFT commutator(const VectorFieldFT& u1, const VectorFieldFT& u2) {
  require_compatible(u1, u2, "commutator");
  VectorFieldFT out = directional_derivative(u1, u2);
  out -= directional_derivative(u2, u1);
  return out;
}

VectorFieldFT hilbert_xi(const VectorFieldFT& u, std::span<const double> omega) {
  return u.map([&](const FourierTaylorSeries& s) { return s.hilbert(omega); });
}

VectorFieldFT hilbert_xi(const VectorFieldFT& u) {
  const std::vector<double> omega(static_cast<std::size_t>(u.shape().n_freq), 1.0);
  if (u.shape().n_freq != 1) {
    throw ContractViolation("hilbert_xi: multi-frequency fields need an explicit omega");
  }
  return hilbert_xi(u, omega);
}

VectorFieldFT d_dt(const VectorFieldFT& u, std::span<const double> omega) {
  return u.map([&](const FourierTaylorSeries& s) { return s.derivative_along(omega); });
}

VectorFieldFT d_dt(const VectorFieldFT& u) {
  if (u.shape().n_freq != 1) {
    throw ContractViolation("d_dt: multi-frequency fields need an explicit omega");
  }
  const double one = 1.0;
  return d_dt(u, std::span<const double>(&one, 1));
}

FourierTaylorSeries divergence(const VectorFieldFT& u) {
  const int n_angles = u.angle_components();
  FourierTaylorSeries out(u.shape());
  for (int j = 0; j < u.dimension(); ++j) {
    out += j < n_angles ? u[j].fourier_derivative(j)
                        : u[j].taylor_derivative(j - n_angles);
  }
  return out;
}

}  // namespace contavg::ft
