#include "contavg/ft/hamiltonian.hpp"

#include <vector>

#include "contavg/errors.hpp"

namespace contavg::ft {

HamiltonianFT::HamiltonianFT(FourierTaylorSeries h) : h_(std::move(h)) {
  if (h_.shape().m != 2) {
    throw ContractViolation("HamiltonianFT: needs exactly one canonical pair (m = 2)");
  }
}

HamiltonianFT poisson_bracket(const HamiltonianFT& f, const HamiltonianFT& g) {
  if (!(f.shape() == g.shape())) {
    throw ContractViolation("poisson_bracket: shapes differ");
  }
  FourierTaylorSeries out(f.shape());
  out.add_product(1.0, f.h().taylor_derivative(0), g.h().taylor_derivative(1));
  out.add_product(-1.0, f.h().taylor_derivative(1), g.h().taylor_derivative(0));
  return HamiltonianFT(std::move(out));
}

VectorFieldFT hamiltonian_to_field(const HamiltonianFT& h) {
  std::vector<FourierTaylorSeries> comps;
  comps.push_back(h.h().taylor_derivative(1));
  comps.push_back(-h.h().taylor_derivative(0));
  return VectorFieldFT(std::move(comps));
}

HamiltonianFT hilbert_xi(const HamiltonianFT& h) {
  return HamiltonianFT(hilbert_xi(h.h()));
}

HamiltonianFT d_dt(const HamiltonianFT& h) { return HamiltonianFT(d_dt(h.h())); }

namespace {

FourierTaylorSeries trig_series(SeriesShape shape, int j, int parity) {
  if (j < 0 || j >= shape.m) {
    throw ContractViolation("trig_series: variable index out of range");
  }
  FourierTaylorSeries out(shape);
  std::vector<int> k(static_cast<std::size_t>(shape.n_freq), 0);
  std::vector<int> a(static_cast<std::size_t>(shape.m), 0);
  double factorial = 1.0;
  for (int p = 0; p <= shape.N; ++p) {
    if (p > 0) factorial *= p;
    if (p % 2 != parity) continue;
    const double sign = ((p - parity) / 2) % 2 == 0 ? 1.0 : -1.0;
    a[j] = p;
    out.set_coeff(k, a, sign / factorial);
  }
  return out;
}

}  // namespace

FourierTaylorSeries cos_series(SeriesShape shape, int j) {
  return trig_series(shape, j, 0);
}

FourierTaylorSeries sin_series(SeriesShape shape, int j) {
  return trig_series(shape, j, 1);
}

}  // namespace contavg::ft
