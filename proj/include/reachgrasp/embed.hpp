#pragma once

#include "reachgrasp/sdf.hpp"

namespace rg {

struct MaskReport {
  std::size_t cells_masked = 0;
  std::size_t cells_previously_reachable_masked = 0;
  double regeneration_seconds = 0.0;
};

// Marks every cell whose translational lattice point lies within
// hand_clearance of any obstacle as unreachable, for all orientations at
// that translation. The input grid is not modified.
std::pair<ReachabilityGrid, MaskReport> mask_obstacles(const ReachabilityGrid& grid,
                                                       const Scene& obstacles,
                                                       double hand_clearance);

// Mask, then recompute the SDF of the result; the report carries the
// regeneration wall-clock time.
std::pair<SdfGrid, MaskReport> embed_and_regenerate(const ReachabilityGrid& grid,
                                                    const Scene& obstacles,
                                                    const MetricParams& metric,
                                                    double hand_clearance,
                                                    const SdfOptions& opts = {});

}  // namespace rg
