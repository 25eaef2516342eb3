#include "contavg/oracle/conjugacy.hpp"

#include <algorithm>
#include <cmath>

#include "contavg/errors.hpp"
#include "contavg/oracle/ode.hpp"

namespace contavg::oracle {

void ConjugacyProbe::validate() const {
  if (points.empty()) throw ContractViolation("probe needs at least one point");
  if (!(horizon >= 0.0) || !(tol > 0.0)) {
    throw ContractViolation("probe horizon must be >= 0 and tol > 0");
  }
  if (box) {
    for (const auto& p : points) {
      if (!box->contains(p)) throw ContractViolation("probe point outside the validity box");
    }
  }
}

std::vector<double> flow(const ft::VectorFieldFT& field, std::span<const double> z0,
                         double t0, double t1, double tol,
                         const std::optional<averaging::ValidityBox>& box) {
  if (field.kind() != ft::PhaseKind::kTimePeriodic || field.shape().n_freq != 1) {
    throw ContractViolation("flow expects a 2pi-periodic field");
  }
  if (static_cast<int>(z0.size()) != field.dimension()) {
    throw ContractViolation("point dimension differs from the field");
  }
  OdeOptions opts;
  opts.tol = tol;
  auto rhs = [&](const State& z, State& dz, double t) {
    const double tt[1] = {t};
    dz = field.evaluate_real(z, tt);
  };
  // Unit-length legs so an excursion out of the box is noticed on the way.
  State z(z0.begin(), z0.end());
  const int legs = std::max(1, static_cast<int>(std::ceil(std::abs(t1 - t0))));
  for (int i = 0; i < legs; ++i) {
    const double a = t0 + (t1 - t0) * i / legs;
    const double b = i + 1 == legs ? t1 : t0 + (t1 - t0) * (i + 1) / legs;
    z = ode_integrate(rhs, std::move(z), a, b, opts);
    if (box && !box->contains(z)) throw OutOfDomainError("trajectory left the validity box");
  }
  return z;
}

double conjugacy_check(const ft::VectorFieldFT& original,
                       const ft::VectorFieldFT& transformed, const ChangeFn& change,
                       const ConjugacyProbe& probe) {
  probe.validate();
  const double T = probe.t0 + probe.horizon;
  double worst = 0.0;
  for (const auto& z0 : probe.points) {
    const auto zT = flow(original, z0, probe.t0, T, probe.tol, probe.box);
    const auto Z0 = change(z0, probe.t0);
    const auto ZT = flow(transformed, Z0, probe.t0, T, probe.tol, probe.box);
    const auto cT = change(zT, T);
    for (std::size_t i = 0; i < ZT.size(); ++i) {
      worst = std::max(worst, std::abs(ZT[i] - cT[i]));
    }
  }
  return worst;
}

}  // namespace contavg::oracle
