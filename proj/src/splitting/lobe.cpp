#include "contavg/splitting/lobe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "contavg/errors.hpp"
#include "contavg/splitting/melnikov.hpp"

namespace contavg::splitting {
namespace {

constexpr double kPi = std::numbers::pi;

// Root of f on [a, b] (f(a), f(b) of opposite sign).
template <class F>
double solve(F f, double a, double b, double fa, double fb, int bits) {
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(
      f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(bits), iters);
  return 0.5 * (r.first + r.second);
}

bool symmetric_section(double t0) {
  const double r = std::remainder(t0, kPi);
  return std::abs(r) < 1e-12;
}

double tau_of_x(double x) { return std::log(std::tan(0.25 * x)); }

}  // namespace

double branch_y_at(const ManifoldSegment& seg, double x) {
  const auto& pts = seg.points;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i][0] - x, b = pts[i + 1][0] - x;
    if (a == 0.0) return pts[i][1];
    if ((a < 0.0) == (b < 0.0) && b != 0.0) continue;
    if (b == 0.0) return pts[i + 1][1];
    auto f = [&](double th) { return seg.point_at(th)[0] - x; };
    const double th = solve(f, seg.theta[i], seg.theta[i + 1], a, b, 52);
    const Point q = seg.point_at(th);
    // first-order correction of the residual x offset along the chord
    const double slope = (pts[i + 1][1] - pts[i][1]) / (pts[i + 1][0] - pts[i][0]);
    return q[1] - (q[0] - x) * slope;
  }
  throw OutOfDomainError("x outside the manifold segment");
}

LobeRecord homoclinic_and_lobe(const PendulumParams& p, const ManifoldSegment& stable,
                               const ManifoldSegment& unstable, const LobeOptions& opts) {
  p.validate();
  if (stable.branch != Branch::kStable || unstable.branch != Branch::kUnstable) {
    throw ContractViolation("homoclinic_and_lobe expects (stable, unstable) segments");
  }
  LobeRecord rec;
  rec.eps = p.eps;
  rec.B = p.B;
  rec.section_phase = unstable.section_phase;
  rec.area_melnikov = melnikov_lobe(p);
  rec.area_paper = paper_lobe_area(p);

  auto delta = [&](double x) { return branch_y_at(unstable, x) - branch_y_at(stable, x); };
  const int n = std::max(8, opts.scan_points);
  std::vector<double> xs(n), ds(n);
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    xs[i] = opts.x_lo + (opts.x_hi - opts.x_lo) * i / (n - 1);
    ds[i] = delta(xs[i]);
    peak = std::max(peak, std::abs(ds[i]));
  }
  if (peak <= opts.floor) {
    rec.below_floor = true;
    rec.note = "manifold separation below the measurable floor";
    return rec;
  }
  auto refine = [&](int i) {
    return solve(delta, xs[i], xs[i + 1], ds[i], ds[i + 1], 40);
  };

  double x0 = 0.0, x1 = 0.0;
  bool found = false;
  if (symmetric_section(rec.section_phase)) {
    // The reversor (x, y) -> (2 pi - x, y) swaps the branches, so x = pi is
    // homoclinic; the neighbouring crossing lies to its right.
    x0 = kPi;
    for (int i = 0; i + 1 < n && !found; ++i) {
      if (xs[i + 1] <= kPi + 1e-3) continue;
      if (xs[i] <= kPi) continue;
      if ((ds[i] < 0.0) != (ds[i + 1] < 0.0)) {
        x1 = refine(i);
        found = true;
      }
    }
  }
  if (!found) {
    std::vector<double> zeros;
    for (int i = 0; i + 1 < n; ++i) {
      if ((ds[i] < 0.0) != (ds[i + 1] < 0.0)) zeros.push_back(refine(i));
    }
    if (zeros.size() < 2) {
      rec.below_floor = true;
      rec.note = "fewer than two transversal crossings in the window";
      return rec;
    }
    std::size_t j = 0;
    for (std::size_t i = 1; i < zeros.size(); ++i) {
      if (std::abs(zeros[i] - kPi) < std::abs(zeros[j] - kPi)) j = i;
    }
    if (j + 1 < zeros.size()) {
      x0 = zeros[j];
      x1 = zeros[j + 1];
    } else {
      x0 = zeros[j - 1];
      x1 = zeros[j];
    }
  }
  using boost::math::quadrature::gauss;
  rec.area_measured = std::abs(gauss<double, 30>::integrate(delta, x0, x1));
  rec.homoclinic_points = {Point{x0, branch_y_at(unstable, x0)},
                           Point{x1, branch_y_at(unstable, x1)}};
  if (!(rec.area_measured > 0.0)) {
    rec.below_floor = true;
    rec.note = "zero lobe area";
  }
  return rec;
}

LobeRecord measure_lobe(const PendulumParams& p, double t0, const LobeOptions& opts) {
  p.validate();
  // Fundamental domains needed to span the window along the separatrix,
  // plus one for the offset of the first iterate.
  const double span = tau_of_x(opts.x_hi) - tau_of_x(opts.x_lo);
  const int len = static_cast<int>(std::ceil(span / (2.0 * kPi * p.eps))) + 2;
  SegmentOptions su, ss;
  su.map = ss.map = opts.map;
  su.start_progress = opts.x_lo;
  ss.start_progress = 2.0 * kPi - opts.x_hi;
  const int pts = std::max(opts.n_points, 40 * len);
  const auto unstable = manifold_segment(p, Branch::kUnstable, t0, pts, len, su);
  const auto stable = manifold_segment(p, Branch::kStable, t0, pts, len, ss);
  return homoclinic_and_lobe(p, stable, unstable, opts);
}

}  // namespace contavg::splitting
