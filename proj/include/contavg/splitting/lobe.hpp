#pragma once

#include <array>
#include <numbers>
#include <string>

#include "contavg/splitting/manifold.hpp"

namespace contavg::splitting {

struct LobeRecord {
  double eps = 0.0;
  double B = 0.0;
  double section_phase = 0.0;
  // No transversal crossing above the floor: the splitting is not
  // measurable and the areas below are not meaningful.
  bool below_floor = false;
  std::string note;
  double area_measured = 0.0;
  double area_melnikov = 0.0;
  double area_paper = 0.0;
  std::array<Point, 2> homoclinic_points{};

  double rel_err_melnikov() const {
    return (area_measured - area_melnikov) / area_melnikov;
  }
  double ratio_to_paper() const { return area_measured / area_paper; }
};

struct LobeOptions {
  // x-window scanned for crossings; it spans more than a full forcing
  // period of the motion along the separatrix for eps <= 0.3.
  double x_lo = std::numbers::pi - 1.5;
  double x_hi = std::numbers::pi + 2.2;
  int scan_points = 64;
  // Largest |y_u - y_s| in the window below which the splitting is
  // reported as unmeasurable.
  double floor = 1e-11;
  int n_points = 160;
  MapOptions map;
};

// y of a branch at abscissa x, where the branch is a graph over x. Throws
// OutOfDomainError outside the segment.
double branch_y_at(const ManifoldSegment& seg, double x);

// Locates two adjacent primary homoclinic points and measures the lobe
// between them: area = |int (y_u - y_s) dx| by 30-point Gauss-Legendre.
// Sections t0 = 0 (mod pi) start from the reversor line x = pi; other
// sections use a generic crossing scan.
LobeRecord homoclinic_and_lobe(const PendulumParams& p, const ManifoldSegment& stable,
                               const ManifoldSegment& unstable,
                               const LobeOptions& opts = {});

// Builds both segments over the window and calls homoclinic_and_lobe.
LobeRecord measure_lobe(const PendulumParams& p, double t0, const LobeOptions& opts = {});

}  // namespace contavg::splitting
