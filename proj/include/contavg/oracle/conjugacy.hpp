#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "contavg/averaging/transport.hpp"
#include "contavg/ft/vector_field.hpp"

namespace contavg::oracle {

struct ConjugacyProbe {
  std::vector<std::vector<double>> points;
  double t0 = 0.0;
  double horizon = 10.0;
  double tol = 1e-12;
  std::optional<averaging::ValidityBox> box;

  void validate() const;
};

// The coordinate change z -> Z at time t.
using ChangeFn = std::function<std::vector<double>(std::span<const double> z, double t)>;

// For every probe point: z(T) from z' = original(z, t), Z(T) from
// Z' = transformed(Z, t) with Z(t0) = change(z_i, t0); returns
// max_i |Z(T) - change(z(T), T)|_inf. Escape from the box throws
// OutOfDomainError.
double conjugacy_check(const ft::VectorFieldFT& original,
                       const ft::VectorFieldFT& transformed,
                       const ChangeFn& change, const ConjugacyProbe& probe);

// Trajectory of a time-periodic field.
std::vector<double> flow(const ft::VectorFieldFT& field, std::span<const double> z0,
                         double t0, double t1, double tol,
                         const std::optional<averaging::ValidityBox>& box = std::nullopt);

}  // namespace contavg::oracle
