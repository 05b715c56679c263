#pragma once

#include "reachgrasp/grid.hpp"

namespace rg {

// Mixed 6D metric: translational displacements are measured in units of
// res_lin centimeters, rotational displacements in units of res_rot radians,
// weighted by the ratio r.
struct MetricParams {
  double res_lin_cm = 10.0;
  double res_rot_rad = M_PI / 4.0;
  double ratio = 1.0;

  void validate() const;
};

// sqrt(|dxyz/res_lin|^2 + r * |drpy/res_rot|^2), angular differences wrapped
// to [-pi, pi). Grid coordinates are meters; the metric converts to cm.
double metric_distance(const Pose6& a, const Pose6& b, const MetricParams& m);

struct SdfGrid {
  GridSpec6 spec;
  MetricParams metric;
  std::vector<double> values;  // metric units, sign = reachable side
  GridProvenance provenance;

  // Metric length of one grid step along an axis.
  double axis_step_length(int axis) const;
  // Metric length of the grid box diagonal (angular extents capped at the
  // wrap distance pi); the planner's out-of-box sentinel magnitude.
  double box_diagonal_length() const;
};

struct DegenerateGridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Neighborhood {
  Auto,      // diagonal when the relaxation count is small, faces otherwise
  Faces,     // 2 per active axis
  Diagonal,  // full {-1,0,1}^k stencil over active axes
};

struct SdfOptions {
  Neighborhood neighborhood = Neighborhood::Auto;
};

// Signed distance to the reachable/unreachable boundary, propagated by a
// Dijkstra wavefront over the grid graph with metric-weighted edges and
// cyclic wrap. Cells adjacent to an opposite label seed the front at half
// the crossing edge's length. Throws DegenerateGridError when all labels
// agree.
SdfGrid compute_sdf(const ReachabilityGrid& grid, const MetricParams& m,
                    const SdfOptions& opts = {});

// Exact (quadratic-cost) oracle: per cell, the minimum metric distance to
// any opposite-label cell center, signed by the cell's own label. Small
// grids only.
SdfGrid brute_force_sdf(const ReachabilityGrid& grid, const MetricParams& m);

// Multilinear interpolation over the 2^6 corners of the enclosing
// hypervoxel; cyclic axes interpolate across the seam. Throws
// OutOfDomainError when a non-cyclic coordinate leaves the grid box.
double query_sdf(const SdfGrid& sdf, const Pose6& p);

struct SdfQuality {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  std::size_t n = 0;
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

// Binary-classification quality of the SDF sign against the IK oracle on n
// uniform random poses in the grid box. A value of exactly 0 classifies as
// reachable.
SdfQuality evaluate_sdf_quality(const SdfGrid& sdf, const ArmModel& arm,
                                const Scene& scene, std::size_t n,
                                const IkParams& oracle, std::uint64_t seed);

// "SDF6" binary format: RGRD-style header + metric record + f32 payload +
// trailing CRC-32.
void save_sdf(const SdfGrid& sdf, const std::string& path);
SdfGrid load_sdf(const std::string& path);

}  // namespace rg
