#pragma once

#include "contavg/ft/series.hpp"
#include "contavg/ft/vector_field.hpp"

namespace contavg::ft {

// Time-periodic Hamiltonian on one canonical pair (x, y): a series with
// m = 2 whose Taylor variables are ordered (x, y).
class HamiltonianFT {
 public:
  HamiltonianFT() : h_(SeriesShape{1, 2, 1, 2}) {}
  explicit HamiltonianFT(FourierTaylorSeries h);

  const FourierTaylorSeries& h() const { return h_; }
  FourierTaylorSeries& h() { return h_; }
  const SeriesShape& shape() const { return h_.shape(); }

  HamiltonianFT& operator+=(const HamiltonianFT& o) { h_ += o.h_; return *this; }
  HamiltonianFT& operator-=(const HamiltonianFT& o) { h_ -= o.h_; return *this; }
  HamiltonianFT& operator*=(double c) { h_ *= c; return *this; }
  HamiltonianFT& add_scaled(double c, const HamiltonianFT& o) {
    h_.add_scaled(c, o.h_);
    return *this;
  }
  friend HamiltonianFT operator+(HamiltonianFT a, const HamiltonianFT& b) { return a += b; }
  friend HamiltonianFT operator-(HamiltonianFT a, const HamiltonianFT& b) { return a -= b; }
  friend HamiltonianFT operator*(HamiltonianFT a, double c) { return a *= c; }
  friend HamiltonianFT operator*(double c, HamiltonianFT a) { return a *= c; }

  HamiltonianFT mean() const { return HamiltonianFT(h_.mean()); }
  HamiltonianFT oscillatory() const { return HamiltonianFT(h_.oscillatory()); }
  WeightedNorm weighted_norm(const TruncationPolicy& p) const { return h_.weighted_norm(p); }

 private:
  FourierTaylorSeries h_;
};

// {f, g} = f_x g_y - f_y g_x.
HamiltonianFT poisson_bracket(const HamiltonianFT& f, const HamiltonianFT& g);
// J grad h = (h_y, -h_x). Under this map
//   hamiltonian_to_field({f, g}) = -[J grad f, J grad g].
VectorFieldFT hamiltonian_to_field(const HamiltonianFT& h);
HamiltonianFT hilbert_xi(const HamiltonianFT& h);
HamiltonianFT d_dt(const HamiltonianFT& h);

// Taylor polynomial of cos(x) (or sin(x)) about x = 0 in variable j, up to
// the shape's degree N, as a time-independent series.
FourierTaylorSeries cos_series(SeriesShape shape, int j);
FourierTaylorSeries sin_series(SeriesShape shape, int j);

}  // namespace contavg::ft
