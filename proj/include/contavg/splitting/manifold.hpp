#pragma once

#include <limits>
#include <vector>

#include "contavg/splitting/pendulum.hpp"

namespace contavg::splitting {

enum class Branch { kStable, kUnstable };

struct SegmentOptions {
  // Side of the eigenvector the branch leaves along (+1: positive y).
  int side = 1;
  // x of the fixed point the branch is attached to. NaN selects the default:
  // 0 for the unstable branch, 2 pi for the stable one, so both default
  // branches run along the upper separatrix.
  double anchor_x = std::numeric_limits<double>::quiet_NaN();
  // Distance along x from the anchor at which the segment starts.
  double start_progress = 1.5;
  // Largest seed distance; halved until the linear seed error is below
  // seed_tolerance, failing below seed_floor.
  double max_seed = 1e-6;
  double seed_tolerance = 1e-13;
  double seed_floor = 1e-10;
  MapOptions map;
};

// Piece of a separatrix in the section t = section_phase, parameterized by
//   W(theta) = P^{+-iterations}(anchor + seed_delta e^theta direction),
// theta in [0, fundamental_len ln lambda]; P for the unstable branch, its
// inverse for the stable one. Increasing theta moves away from the anchor.
struct ManifoldSegment {
  Branch branch = Branch::kUnstable;
  double section_phase = 0.0;
  PendulumParams params;
  MapOptions map;
  Point anchor{0.0, 0.0};
  Eigen::Vector2d direction{1.0, 0.0};
  double seed_delta = 0.0;
  int iterations = 0;
  // Expansion factor of the branch per iteration (lambda_u, or 1/lambda_s).
  double lambda = 1.0;
  std::vector<double> theta;
  std::vector<Point> points;

  Point point_at(double th) const;
  // One more application of the branch's map shifts theta by ln lambda.
  double theta_step() const;
};

ManifoldSegment manifold_segment(const PendulumParams& p, Branch branch, double t0,
                                 int n_points, int fundamental_len,
                                 const SegmentOptions& opts = {});

}  // namespace contavg::splitting
