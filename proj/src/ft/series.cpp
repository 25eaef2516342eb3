#include "contavg/ft/series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "contavg/errors.hpp"

namespace contavg::ft {

void TruncationPolicy::validate() const {
  if (K < 1) throw ContractViolation("TruncationPolicy: K must be >= 1");
  if (N < 1) throw ContractViolation("TruncationPolicy: N must be >= 1");
  if (!(drop_eps >= 0.0)) {
    throw ContractViolation("TruncationPolicy: drop_eps must be >= 0");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ContractViolation("TruncationPolicy: rho must be > 0");
  }
  if (!(q >= 0.0) || !std::isfinite(q)) {
    throw ContractViolation("TruncationPolicy: q must be >= 0");
  }
}

FourierTaylorSeries::FourierTaylorSeries(SeriesShape shape)
    : shape_(shape),
      fourier_(FourierIndex::get(shape.n_freq, shape.K)),
      taylor_(TaylorIndex::get(shape.m, shape.N)),
      data_(static_cast<std::size_t>(fourier_->stored_size()) * taylor_->size()) {}

FourierTaylorSeries FourierTaylorSeries::constant(SeriesShape shape, double c) {
  FourierTaylorSeries out(shape);
  out.data_[0] = c;
  return out;
}

FourierTaylorSeries FourierTaylorSeries::term(SeriesShape shape,
                                              std::span<const int> k,
                                              std::span<const int> a,
                                              Complex c) {
  FourierTaylorSeries out(shape);
  out.set_coeff(k, a, c);
  return out;
}

FourierTaylorSeries FourierTaylorSeries::term(SeriesShape shape, int k,
                                              std::initializer_list<int> a,
                                              Complex c) {
  std::vector<int> kv(static_cast<std::size_t>(shape.n_freq), 0);
  kv[0] = k;
  return term(shape, kv, std::span<const int>(a.begin(), a.size()), c);
}

FourierTaylorSeries FourierTaylorSeries::variable(SeriesShape shape, int j) {
  if (j < 0 || j >= shape.m) {
    throw ContractViolation("FourierTaylorSeries::variable: index out of range");
  }
  std::vector<int> k(static_cast<std::size_t>(shape.n_freq), 0);
  std::vector<int> a(static_cast<std::size_t>(shape.m), 0);
  a[j] = 1;
  return term(shape, k, a, 1.0);
}

Complex FourierTaylorSeries::coeff(std::span<const int> k,
                                   std::span<const int> a) const {
  const auto slot = fourier_->slot(k);
  const int ia = taylor_->index_of(a);
  if (slot.stored < 0 || ia < 0) return 0.0;
  const Complex c = mode(slot.stored)[ia];
  return slot.conjugate ? std::conj(c) : c;
}

Complex FourierTaylorSeries::coeff(int k, std::initializer_list<int> a) const {
  std::vector<int> kv(static_cast<std::size_t>(shape_.n_freq), 0);
  kv[0] = k;
  return coeff(kv, std::span<const int>(a.begin(), a.size()));
}

void FourierTaylorSeries::set_coeff(std::span<const int> k,
                                    std::span<const int> a, Complex c) {
  const auto slot = fourier_->slot(k);
  const int ia = taylor_->index_of(a);
  if (slot.stored < 0 || ia < 0) {
    throw ContractViolation("FourierTaylorSeries::set_coeff: index outside (K, N)");
  }
  if (slot.stored == 0) c = c.real();
  mode(slot.stored)[ia] = slot.conjugate ? std::conj(c) : c;
}

void FourierTaylorSeries::set_coeff(int k, std::initializer_list<int> a,
                                    Complex c) {
  std::vector<int> kv(static_cast<std::size_t>(shape_.n_freq), 0);
  kv[0] = k;
  set_coeff(kv, std::span<const int>(a.begin(), a.size()), c);
}

bool FourierTaylorSeries::mode_is_zero(int i) const {
  for (const auto& c : mode(i)) {
    if (c != Complex(0.0)) return false;
  }
  return true;
}

bool FourierTaylorSeries::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& c) { return c == Complex(0.0); });
}

double FourierTaylorSeries::max_abs() const {
  double m = 0.0;
  for (const auto& c : data_) m = std::max(m, std::abs(c));
  return m;
}

void FourierTaylorSeries::require_same_shape(const FourierTaylorSeries& other,
                                             const char* what) const {
  if (!(shape_ == other.shape_)) {
    throw ContractViolation(std::string(what) + ": series shapes differ");
  }
}

FourierTaylorSeries& FourierTaylorSeries::operator+=(
    const FourierTaylorSeries& other) {
  require_same_shape(other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

FourierTaylorSeries& FourierTaylorSeries::operator-=(
    const FourierTaylorSeries& other) {
  require_same_shape(other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

FourierTaylorSeries& FourierTaylorSeries::operator*=(double c) {
  for (auto& v : data_) v *= c;
  return *this;
}

FourierTaylorSeries& FourierTaylorSeries::add_scaled(
    double c, const FourierTaylorSeries& other) {
  require_same_shape(other, "add_scaled");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += c * other.data_[i];
  return *this;
}

namespace {

template <bool ConjA, bool ConjB>
void poly_mul_add(std::span<const TaylorIndex::ProductEntry> table, Complex scale,
                  const Complex* a, const Complex* b, Complex* out) {
  for (const auto& e : table) {
    const Complex x = ConjA ? std::conj(a[e.lhs]) : a[e.lhs];
    const Complex y = ConjB ? std::conj(b[e.rhs]) : b[e.rhs];
    out[e.out] += scale * (x * y);
  }
}

// Box indices (both halves) of the nonzero modes of s.
std::vector<int> nonzero_box(const FourierTaylorSeries& s) {
  const auto& fi = s.fourier();
  std::vector<int> out;
  for (int i = 0; i < s.stored_modes(); ++i) {
    if (s.mode_is_zero(i)) continue;
    const int b = fi.box_of_stored(i);
    out.push_back(b);
    if (i != 0) out.push_back(fi.box_of_negated(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void FourierTaylorSeries::add_product(double c, const FourierTaylorSeries& a,
                                      const FourierTaylorSeries& b) {
  require_same_shape(a, "product");
  require_same_shape(b, "product");
  const auto za = nonzero_box(a);
  if (za.empty()) return;
  const auto zb = nonzero_box(b);
  if (zb.empty()) return;
  const auto& fi = *fourier_;
  const int centre = (fi.box_size() - 1) / 2;
  const auto table = taylor_->products();
  const Complex scale(c, 0.0);
  for (int la : za) {
    const auto sa = fi.slot_of_box(la);
    const Complex* pa = a.mode(sa.stored).data();
    for (int lb : zb) {
      const int sum = fi.box_difference(la, fi.box_of_negated(lb));
      if (sum < centre) continue;  // outside the box or in the conjugate half
      const auto sb = fi.slot_of_box(lb);
      const Complex* pb = b.mode(sb.stored).data();
      Complex* po = mode(fi.slot_of_box(sum).stored).data();
      if (sa.conjugate) {
        if (sb.conjugate) {
          poly_mul_add<true, true>(table, scale, pa, pb, po);
        } else {
          poly_mul_add<true, false>(table, scale, pa, pb, po);
        }
      } else if (sb.conjugate) {
        poly_mul_add<false, true>(table, scale, pa, pb, po);
      } else {
        poly_mul_add<false, false>(table, scale, pa, pb, po);
      }
    }
  }
  enforce_reality();
}

FourierTaylorSeries operator*(const FourierTaylorSeries& a,
                              const FourierTaylorSeries& b) {
  FourierTaylorSeries out(a.shape());
  out.add_product(1.0, a, b);
  return out;
}

FourierTaylorSeries FourierTaylorSeries::taylor_derivative(int j) const {
  if (j < 0 || j >= shape_.m) {
    throw ContractViolation("taylor_derivative: variable index out of range");
  }
  FourierTaylorSeries out(shape_);
  const auto table = taylor_->derivative(j);
  for (int i = 0; i < stored_modes(); ++i) {
    auto src = mode(i);
    auto dst = out.mode(i);
    for (int a = 0; a < monomials(); ++a) {
      if (table[a].out >= 0) dst[table[a].out] += table[a].factor * src[a];
    }
  }
  return out;
}

FourierTaylorSeries FourierTaylorSeries::fourier_derivative(int j) const {
  if (j < 0 || j >= shape_.n_freq) {
    throw ContractViolation("fourier_derivative: variable index out of range");
  }
  FourierTaylorSeries out(*this);
  for (int i = 0; i < stored_modes(); ++i) {
    const Complex f(0.0, fourier_->mode(i)[j]);
    for (auto& v : out.mode(i)) v *= f;
  }
  return out;
}

FourierTaylorSeries FourierTaylorSeries::derivative_along(
    std::span<const double> omega) const {
  if (static_cast<int>(omega.size()) != shape_.n_freq) {
    throw ContractViolation("derivative_along: frequency vector has wrong length");
  }
  FourierTaylorSeries out(*this);
  for (int i = 0; i < stored_modes(); ++i) {
    double w = 0.0;
    auto k = fourier_->mode(i);
    for (int j = 0; j < shape_.n_freq; ++j) w += k[j] * omega[j];
    const Complex f(0.0, w);
    for (auto& v : out.mode(i)) v *= f;
  }
  return out;
}

FourierTaylorSeries FourierTaylorSeries::hilbert(
    std::span<const double> omega) const {
  if (static_cast<int>(omega.size()) != shape_.n_freq) {
    throw ContractViolation("hilbert: frequency vector has wrong length");
  }
  FourierTaylorSeries out(*this);
  for (int i = 0; i < stored_modes(); ++i) {
    double w = 0.0;
    auto k = fourier_->mode(i);
    for (int j = 0; j < shape_.n_freq; ++j) w += k[j] * omega[j];
    const double sign = (w > 0.0) - (w < 0.0);
    const Complex f(0.0, sign);
    for (auto& v : out.mode(i)) v *= f;
  }
  return out;
}

FourierTaylorSeries FourierTaylorSeries::mean() const {
  FourierTaylorSeries out(shape_);
  std::copy(mode(0).begin(), mode(0).end(), out.mode(0).begin());
  return out;
}

FourierTaylorSeries FourierTaylorSeries::oscillatory() const {
  FourierTaylorSeries out(*this);
  for (auto& v : out.mode(0)) v = 0.0;
  return out;
}

namespace {

std::vector<Complex> monomial_values(const TaylorIndex& ti,
                                     std::span<const Complex> z) {
  const int m = ti.vars();
  const int N = ti.max_degree();
  std::vector<Complex> powers(static_cast<std::size_t>(m) * (N + 1));
  for (int j = 0; j < m; ++j) {
    if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) {
      throw ContractViolation("evaluate: non-finite point");
    }
    powers[j * (N + 1)] = 1.0;
    for (int p = 1; p <= N; ++p) {
      powers[j * (N + 1) + p] = powers[j * (N + 1) + p - 1] * z[j];
    }
  }
  std::vector<Complex> values(static_cast<std::size_t>(ti.size()));
  for (int i = 0; i < ti.size(); ++i) {
    Complex v = 1.0;
    auto e = ti.exponent(i);
    for (int j = 0; j < m; ++j) v *= powers[j * (N + 1) + e[j]];
    values[i] = v;
  }
  return values;
}

}  // namespace

Complex FourierTaylorSeries::evaluate(std::span<const Complex> z,
                                      std::span<const Complex> t) const {
  if (static_cast<int>(z.size()) != shape_.m ||
      static_cast<int>(t.size()) != shape_.n_freq) {
    throw ContractViolation("evaluate: point has wrong dimension");
  }
  for (const auto& ti : t) {
    if (!std::isfinite(ti.real()) || !std::isfinite(ti.imag())) {
      throw ContractViolation("evaluate: non-finite time");
    }
  }
  const auto mono = monomial_values(*taylor_, z);
  Complex total = 0.0;
  for (int i = 0; i < stored_modes(); ++i) {
    if (mode_is_zero(i)) continue;
    Complex plus = 0.0;
    Complex minus = 0.0;
    auto c = mode(i);
    for (int a = 0; a < monomials(); ++a) {
      plus += c[a] * mono[a];
      minus += std::conj(c[a]) * mono[a];
    }
    if (i == 0) {
      total += plus;
      continue;
    }
    Complex phase = 0.0;
    auto k = fourier_->mode(i);
    for (int j = 0; j < shape_.n_freq; ++j) phase += static_cast<double>(k[j]) * t[j];
    const Complex e = std::exp(Complex(0.0, 1.0) * phase);
    total += plus * e + minus / e;
  }
  return total;
}

Complex FourierTaylorSeries::evaluate(std::span<const double> z,
                                      std::span<const double> t) const {
  std::vector<Complex> zc(z.begin(), z.end());
  std::vector<Complex> tc(t.begin(), t.end());
  return evaluate(zc, tc);
}

Complex FourierTaylorSeries::evaluate_mode(std::span<const int> k,
                                           std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != shape_.m) {
    throw ContractViolation("evaluate_mode: point has wrong dimension");
  }
  const auto slot = fourier_->slot(k);
  if (slot.stored < 0) return 0.0;
  const auto mono = monomial_values(*taylor_, z);
  Complex total = 0.0;
  auto c = mode(slot.stored);
  for (int a = 0; a < monomials(); ++a) {
    total += (slot.conjugate ? std::conj(c[a]) : c[a]) * mono[a];
  }
  return total;
}

double FourierTaylorSeries::mode_norm(int i, double rho) const {
  double sum = 0.0;
  auto c = mode(i);
  for (int a = 0; a < monomials(); ++a) {
    if (c[a] == Complex(0.0)) continue;
    sum += std::abs(c[a]) * std::pow(rho, taylor_->degree(a));
  }
  return i == 0 ? sum : 2.0 * sum;
}

WeightedNorm FourierTaylorSeries::weighted_norm(
    const TruncationPolicy& policy) const {
  WeightedNorm out;
  for (int i = 0; i < stored_modes(); ++i) {
    const double m = mode_norm(i, policy.rho);
    if (m == 0.0) continue;
    out.value += m * std::exp(policy.q * fourier_->l1(i));
  }
  if (!std::isfinite(out.value)) {
    out.value = DBL_MAX;
    out.saturated = true;
  }
  return out;
}

FourierTaylorSeries FourierTaylorSeries::reshaped(SeriesShape shape) const {
  if (shape.n_freq != shape_.n_freq || shape.m != shape_.m) {
    throw ContractViolation("reshaped: only K and N may change");
  }
  if (shape == shape_) return *this;
  FourierTaylorSeries out(shape);
  const auto& ti_out = out.taylor();
  for (int i = 0; i < stored_modes(); ++i) {
    if (mode_is_zero(i)) continue;
    const auto slot = out.fourier().slot(fourier_->mode(i));
    if (slot.stored < 0) continue;
    auto src = mode(i);
    auto dst = out.mode(slot.stored);
    for (int a = 0; a < monomials(); ++a) {
      const int target = ti_out.index_of(taylor_->exponent(a));
      if (target >= 0) dst[target] = src[a];
    }
  }
  return out;
}

FourierTaylorSeries FourierTaylorSeries::truncated(const TruncationPolicy& policy,
                                                  double* dropped_mass) const {
  SeriesShape target = shape_;
  target.K = policy.K;
  target.N = policy.N;
  FourierTaylorSeries out = reshaped(target);
  double dropped = 0.0;
  if (dropped_mass != nullptr) {
    double before = 0.0;
    for (const auto& c : data_) before += std::abs(c);
    double after = 0.0;
    for (const auto& c : out.data_) after += std::abs(c);
    dropped = std::max(0.0, before - after);
  }
  if (policy.drop_eps > 0.0) {
    for (auto& c : out.data_) {
      if (c != Complex(0.0) && std::abs(c) < policy.drop_eps) {
        dropped += std::abs(c);
        c = 0.0;
      }
    }
  }
  if (dropped_mass != nullptr) *dropped_mass = dropped;
  return out;
}

void FourierTaylorSeries::enforce_reality() {
  for (auto& v : mode(0)) v = v.real();
}

}  // namespace contavg::ft
