#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "contavg/ft/hamiltonian.hpp"
#include "contavg/ft/series.hpp"
#include "contavg/ft/vector_field.hpp"

namespace contavg::testing {

// Portable uniform draw in [lo, hi) from the raw 64-bit engine output.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random real series with modes |k_i| <= k_max and degree <= n_max.
inline ft::FourierTaylorSeries random_series(ft::SeriesShape shape,
                                             std::mt19937_64& rng, int k_max,
                                             int n_max, double density = 0.7) {
  ft::FourierTaylorSeries s(shape);
  for (int i = 0; i < s.stored_modes(); ++i) {
    auto k = s.fourier().mode(i);
    bool inside = true;
    for (int kj : k) inside = inside && kj >= -k_max && kj <= k_max;
    if (!inside) continue;
    for (int a = 0; a < s.monomials(); ++a) {
      if (s.taylor().degree(a) > n_max) continue;
      if (uniform(rng, 0.0, 1.0) > density) continue;
      const ft::Complex c(uniform(rng, -1, 1), i == 0 ? 0.0 : uniform(rng, -1, 1));
      s.mode(i)[a] = c;
    }
  }
  return s;
}

inline ft::VectorFieldFT random_field(ft::SeriesShape shape, std::mt19937_64& rng,
                                      int k_max, int n_max,
                                      ft::PhaseKind kind = ft::PhaseKind::kTimePeriodic) {
  ft::VectorFieldFT u(shape, kind);
  for (int i = 0; i < u.dimension(); ++i) u[i] = random_series(shape, rng, k_max, n_max);
  return u;
}

inline double norm1(const ft::VectorFieldFT& u) {
  return u.weighted_norm(ft::TruncationPolicy{u.shape().K, u.shape().N, 0.0, 1.0, 0.0}).value;
}

inline double norm1(const ft::FourierTaylorSeries& u) {
  return u.weighted_norm(ft::TruncationPolicy{u.shape().K, u.shape().N, 0.0, 1.0, 0.0}).value;
}

}  // namespace contavg::testing
