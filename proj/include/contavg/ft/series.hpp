#pragma once

#include <complex>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "contavg/ft/fourier_index.hpp"
#include "contavg/ft/taylor_index.hpp"
#include "contavg/ft/truncation.hpp"

namespace contavg::ft {

using Complex = std::complex<double>;

struct SeriesShape {
  int n_freq = 1;  // number of Fourier variables (time, or torus angles)
  int m = 1;       // number of Taylor variables
  int K = 1;
  int N = 1;

  bool operator==(const SeriesShape&) const = default;
};

struct WeightedNorm {
  double value = 0.0;
  bool saturated = false;  // the sum overflowed; value is DBL_MAX
};

// Truncated double series
//   f(z, t) = sum_{|k_i| <= K} sum_{|a| <= N} c_{k,a} z^a e^{i<k,t>}
// of a real function: c_{-k,a} = conj(c_{k,a}). Only the half lattice of
// modes is stored, so the reality condition holds by construction; the k = 0
// coefficients are kept real.
class FourierTaylorSeries {
 public:
  FourierTaylorSeries() : FourierTaylorSeries(SeriesShape{}) {}
  explicit FourierTaylorSeries(SeriesShape shape);

  static FourierTaylorSeries constant(SeriesShape shape, double c);
  // Real part of the monomial term: c z^a e^{ikt} + conj(c) z^a e^{-ikt} for
  // k != 0 (so c = 1/2 gives z^a cos kt), and Re(c) z^a for k = 0.
  static FourierTaylorSeries term(SeriesShape shape, std::span<const int> k,
                                  std::span<const int> a, Complex c);
  static FourierTaylorSeries term(SeriesShape shape, int k,
                                  std::initializer_list<int> a, Complex c);
  // The coordinate function z_j.
  static FourierTaylorSeries variable(SeriesShape shape, int j);

  const SeriesShape& shape() const { return shape_; }
  const FourierIndex& fourier() const { return *fourier_; }
  const TaylorIndex& taylor() const { return *taylor_; }
  int stored_modes() const { return fourier_->stored_size(); }
  int monomials() const { return taylor_->size(); }

  // Coefficient of z^a e^{i<k,t>} for any k in the box (negative half is
  // synthesized by conjugation). Zero outside the box.
  Complex coeff(std::span<const int> k, std::span<const int> a) const;
  Complex coeff(int k, std::initializer_list<int> a) const;
  // Sets c_{k,a} (and implicitly c_{-k,a}). For k = 0 only the real part is
  // kept.
  void set_coeff(std::span<const int> k, std::span<const int> a, Complex c);
  void set_coeff(int k, std::initializer_list<int> a, Complex c);

  // Raw coefficients of stored mode i, length monomials().
  std::span<const Complex> mode(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * monomials(),
            static_cast<std::size_t>(monomials())};
  }
  std::span<Complex> mode(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * monomials(),
            static_cast<std::size_t>(monomials())};
  }
  bool mode_is_zero(int i) const;
  bool is_zero() const;
  double max_abs() const;

  FourierTaylorSeries& operator+=(const FourierTaylorSeries& other);
  FourierTaylorSeries& operator-=(const FourierTaylorSeries& other);
  FourierTaylorSeries& operator*=(double c);
  // Fused this += c * other.
  FourierTaylorSeries& add_scaled(double c, const FourierTaylorSeries& other);

  friend FourierTaylorSeries operator+(FourierTaylorSeries a,
                                       const FourierTaylorSeries& b) {
    return a += b;
  }
  friend FourierTaylorSeries operator-(FourierTaylorSeries a,
                                       const FourierTaylorSeries& b) {
    return a -= b;
  }
  friend FourierTaylorSeries operator*(FourierTaylorSeries a, double c) {
    return a *= c;
  }
  friend FourierTaylorSeries operator*(double c, FourierTaylorSeries a) {
    return a *= c;
  }
  FourierTaylorSeries operator-() const { return *this * -1.0; }

  // Product truncated to the common shape.
  friend FourierTaylorSeries operator*(const FourierTaylorSeries& a,
                                       const FourierTaylorSeries& b);
  // this += c * a * b, truncated.
  void add_product(double c, const FourierTaylorSeries& a,
                   const FourierTaylorSeries& b);

  // d/dz_j of the Taylor part.
  FourierTaylorSeries taylor_derivative(int j) const;
  // d/dt_j of the Fourier part: mode k times i k_j.
  FourierTaylorSeries fourier_derivative(int j) const;
  // Derivative along the constant frequency vector omega: mode k times
  // i <k, omega>. For n_freq = 1 and omega = {1} this is d/dt.
  FourierTaylorSeries derivative_along(std::span<const double> omega) const;
  // Hilbert transform: mode k times i sign<k, omega>; the mean is removed.
  FourierTaylorSeries hilbert(std::span<const double> omega) const;
  // Mode-wise multiplier f(k) applied to every stored mode (f must be real so
  // the reality condition survives).
  template <class F>
  FourierTaylorSeries scale_modes(F&& f) const {
    FourierTaylorSeries out(*this);
    for (int i = 0; i < stored_modes(); ++i) {
      const double c = f(fourier_->mode(i));
      for (auto& v : out.mode(i)) v *= c;
    }
    return out;
  }

  // k = 0 projection and its complement.
  FourierTaylorSeries mean() const;
  FourierTaylorSeries oscillatory() const;

  // Value at complex Taylor point z (length m) and Fourier angles t (length
  // n_freq, complex allowed).
  Complex evaluate(std::span<const Complex> z, std::span<const Complex> t) const;
  Complex evaluate(std::span<const double> z, std::span<const double> t) const;
  // The Taylor polynomial of mode k alone (either half of the lattice).
  Complex evaluate_mode(std::span<const int> k, std::span<const Complex> z) const;

  // sum over the full lattice of |c_{k,a}| rho^|a| e^{q |k|_1}.
  WeightedNorm weighted_norm(const TruncationPolicy& policy) const;
  // Contribution of stored mode i (counting both k and -k when k != 0).
  double mode_norm(int i, double rho) const;

  // Reshape to the policy's (K, N) (padding or cutting) and zero the
  // coefficients of modulus below drop_eps. Returns the dropped mass
  // sum |c| over stored coefficients.
  FourierTaylorSeries truncated(const TruncationPolicy& policy,
                                double* dropped_mass = nullptr) const;
  FourierTaylorSeries reshaped(SeriesShape shape) const;

  // Reimposes Im c_{0,a} = 0.
  void enforce_reality();

 private:
  void require_same_shape(const FourierTaylorSeries& other,
                          const char* what) const;

  SeriesShape shape_;
  std::shared_ptr<const FourierIndex> fourier_;
  std::shared_ptr<const TaylorIndex> taylor_;
  std::vector<Complex> data_;
};

}  // namespace contavg::ft
