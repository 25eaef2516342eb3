#include "contavg/splitting/manifold.hpp"

#include <cmath>
#include <numbers>

#include "contavg/errors.hpp"

namespace contavg::splitting {

Point ManifoldSegment::point_at(double th) const {
  const double d = seed_delta * std::exp(th);
  Point z{anchor[0] + d * direction[0], anchor[1] + d * direction[1]};
  const int n = branch == Branch::kUnstable ? iterations : -iterations;
  return iterate_map(params, z, section_phase, n, map);
}

double ManifoldSegment::theta_step() const { return std::log(lambda); }

ManifoldSegment manifold_segment(const PendulumParams& p, Branch branch, double t0,
                                 int n_points, int fundamental_len,
                                 const SegmentOptions& opts) {
  p.validate();
  if (n_points < 2 || fundamental_len < 1) {
    throw ContractViolation("segment needs n_points >= 2 and fundamental_len >= 1");
  }
  const FixedPoint fp = hyperbolic_fixed_point(p, t0, opts.map);
  const bool unstable = branch == Branch::kUnstable;

  ManifoldSegment seg;
  seg.branch = branch;
  seg.section_phase = t0;
  seg.params = p;
  seg.map = opts.map;
  const double ax = std::isnan(opts.anchor_x) ? (unstable ? 0.0 : 2.0 * std::numbers::pi)
                                              : opts.anchor_x;
  seg.anchor = {fp.point[0] + ax, fp.point[1]};
  seg.direction = (unstable ? fp.v_u : fp.v_s) * static_cast<double>(opts.side);
  seg.lambda = unstable ? fp.lambda_u : 1.0 / fp.lambda_s;

  // Seed: the image of a seed point must stay on the eigenline up to the
  // tolerance (transverse deviation ~ delta^2 times the curvature).
  const Eigen::Vector2d normal(-seg.direction[1], seg.direction[0]);
  double delta = opts.max_seed;
  for (;;) {
    const Point z{seg.anchor[0] + delta * seg.direction[0],
                  seg.anchor[1] + delta * seg.direction[1]};
    const Point w = unstable ? poincare_map(p, z, t0, opts.map)
                             : poincare_map_inverse(p, z, t0, opts.map);
    const double dev = std::abs(normal.dot(
        Eigen::Vector2d(w[0] - seg.anchor[0], w[1] - seg.anchor[1])));
    if (dev <= opts.seed_tolerance) break;
    delta *= 0.5;
    if (delta < opts.seed_floor) {
      throw ConvergenceError("manifold seeding reached the seed floor");
    }
  }
  seg.seed_delta = delta;

  // Number of iterations that brings the seed just short of start_progress.
  const double sgn = seg.direction[0] >= 0.0 ? 1.0 : -1.0;
  auto progress = [&](const Point& z) { return sgn * (z[0] - seg.anchor[0]); };
  Point z{seg.anchor[0] + delta * seg.direction[0], seg.anchor[1] + delta * seg.direction[1]};
  int n = 0;
  for (;;) {
    const Point next = unstable ? poincare_map(p, z, t0, opts.map)
                                : poincare_map_inverse(p, z, t0, opts.map);
    if (progress(next) >= opts.start_progress) break;
    z = next;
    if (++n > 100000) throw ConvergenceError("manifold does not leave the fixed point");
  }
  seg.iterations = n;

  const double span = fundamental_len * seg.theta_step();
  seg.theta.resize(n_points);
  seg.points.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    seg.theta[i] = span * i / (n_points - 1);
    seg.points[i] = seg.point_at(seg.theta[i]);
  }
  return seg;
}

}  // namespace contavg::splitting
