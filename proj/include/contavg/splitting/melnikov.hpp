#pragma once

#include "contavg/splitting/pendulum.hpp"

namespace contavg::splitting {

// Upper separatrix of y^2/2 + cos x = 1 in slow time tau = eps t.
struct SeparatrixOrbit {
  static double x(double tau);       // 4 arctan e^tau
  static double y(double tau);       // 2 / cosh tau
  static double sin_x(double tau);   // -2 tanh tau / cosh tau
  static double energy(double tau);  // 1
};

struct MelnikovIntegrals {
  // C = int g cos(tau/eps), S = int g sin(tau/eps), g = y sin x on the
  // separatrix, over |tau| <= 40.
  double C = 0.0;
  double S = 0.0;
};

MelnikovIntegrals melnikov_integrals(double eps);

// M(tau0) = int 2B y sin x cos((tau + tau0)/eps) dtau: the first-order
// splitting of the section map in slow time (period 2 pi eps).
double melnikov_function(const PendulumParams& p, double tau0);

// Integral of |M| between consecutive zeros, by quadrature. This is the
// first-order lobe area in the (x, y) plane of the section map.
double melnikov_lobe(const PendulumParams& p);

// The same area in closed form,
//   8 pi B / (eps sinh(pi/(2 eps))) = (16 pi B/eps) e^{-pi/(2eps)} / (1 - e^{-pi/eps}),
// from int sech^2(tau) cos(w tau) dtau = pi w / sinh(pi w / 2).
double melnikov_lobe_closed_form(const PendulumParams& p);

// Leading asymptotic term (8 pi/eps) e^{-pi/(2 eps)} B f(B^2) with f(0) = 2.
double paper_lobe_area(const PendulumParams& p);

}  // namespace contavg::splitting
