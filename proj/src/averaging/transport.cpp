#include "contavg/averaging/transport.hpp"

#include <cmath>

namespace contavg::averaging {

bool ValidityBox::contains(std::span<const double> z) const {
  if (lo.size() != z.size() || hi.size() != z.size()) {
    throw ContractViolation("validity box dimension mismatch");
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!(z[i] >= lo[i] && z[i] <= hi[i])) return false;
  }
  return true;
}

std::vector<double> transported_change(const GeneratorPath& path,
                                       std::span<const double> z0, double t,
                                       const std::optional<ValidityBox>& box) {
  std::vector<double> z(z0.begin(), z0.end());
  if (path.empty()) return z;
  const int dim = path.generator.front().dimension();
  if (static_cast<int>(z.size()) != dim) {
    throw ContractViolation("point dimension differs from the field");
  }
  const double tt[1] = {t};
  const bool torus = path.generator.front().kind() == ft::PhaseKind::kTorus;
  const std::span<const double> tspan =
      torus ? std::span<const double>() : std::span<const double>(tt, 1);

  // Hermite interpolation of f on [s_j, s_j + h] at fraction theta.
  auto f_at = [&](std::size_t j, double h, double theta,
                  std::span<const double> p) {
    std::vector<double> out(dim, 0.0);
    const double t2 = theta * theta, t3 = t2 * theta;
    const double w[4] = {2 * t3 - 3 * t2 + 1, (t3 - 2 * t2 + theta) * h,
                         -2 * t3 + 3 * t2, (t3 - t2) * h};
    const ft::VectorFieldFT* fs[4] = {&path.generator[j], &path.rate[j],
                                      &path.generator[j + 1], &path.rate[j + 1]};
    for (int q = 0; q < 4; ++q) {
      if (w[q] == 0.0) continue;
      const auto v = fs[q]->evaluate_real(p, tspan);
      for (int i = 0; i < dim; ++i) out[i] += w[q] * v[i];
    }
    return out;
  };
  auto check = [&](const std::vector<double>& p) {
    for (double v : p) {
      if (!std::isfinite(v)) throw OutOfDomainError("change of variables diverged");
    }
    if (box && !box->contains(p)) {
      throw OutOfDomainError("change of variables left the validity box");
    }
  };

  check(z);
  std::vector<double> tmp(dim);
  for (std::size_t j = 0; j + 1 < path.s.size(); ++j) {
    const double h = path.s[j + 1] - path.s[j];
    if (h <= 0.0) continue;
    const auto k1 = f_at(j, h, 0.0, z);
    for (int i = 0; i < dim; ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
    const auto k2 = f_at(j, h, 0.5, tmp);
    for (int i = 0; i < dim; ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
    const auto k3 = f_at(j, h, 0.5, tmp);
    for (int i = 0; i < dim; ++i) tmp[i] = z[i] + h * k3[i];
    const auto k4 = f_at(j, h, 1.0, tmp);
    for (int i = 0; i < dim; ++i) {
      z[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    check(z);
  }
  return z;
}

}  // namespace contavg::averaging
