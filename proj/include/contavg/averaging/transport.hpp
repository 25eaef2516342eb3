#pragma once

#include <optional>
#include <span>
#include <vector>

#include "contavg/averaging/engine.hpp"

namespace contavg::averaging {

// Axis-aligned box outside of which a change of variables is not trusted.
struct ValidityBox {
  std::vector<double> lo;
  std::vector<double> hi;

  bool contains(std::span<const double> z) const;
};

// Integrates dZ/ds = f(Z, t, s) from s = 0 to the end of the path at fixed t,
// with f cubic-Hermite interpolated between the recorded samples. Returns
// Z(z0, s_final), the image of z0 under the averaging change of variables.
// Throws OutOfDomainError if Z leaves the box.
std::vector<double> transported_change(const GeneratorPath& path,
                                       std::span<const double> z0, double t,
                                       const std::optional<ValidityBox>& box = std::nullopt);

}  // namespace contavg::averaging
