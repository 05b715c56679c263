#include "reachgrasp/embed.hpp"

#include <chrono>

namespace rg {

std::pair<ReachabilityGrid, MaskReport> mask_obstacles(const ReachabilityGrid& grid,
                                                       const Scene& obstacles,
                                                       double hand_clearance) {
  ReachabilityGrid out = grid;
  MaskReport report;
  const auto counts = grid.spec.counts();
  const std::size_t orient_block = static_cast<std::size_t>(counts[3]) *
                                   static_cast<std::size_t>(counts[4]) *
                                   static_cast<std::size_t>(counts[5]);

  for (int ix = 0; ix < counts[0]; ++ix) {
    for (int iy = 0; iy < counts[1]; ++iy) {
      for (int iz = 0; iz < counts[2]; ++iz) {
        const Eigen::Vector3d p{grid.spec.axes[0].min + ix * grid.spec.axes[0].step,
                                grid.spec.axes[1].min + iy * grid.spec.axes[1].step,
                                grid.spec.axes[2].min + iz * grid.spec.axes[2].step};
        bool overlap = false;
        for (const Obstacle& ob : obstacles.obstacles) {
          if (point_distance(ob.solid, p) <= hand_clearance) {
            overlap = true;
            break;
          }
        }
        if (!overlap) continue;
        const std::size_t base = grid.spec.index_of({ix, iy, iz, 0, 0, 0});
        for (std::size_t k = 0; k < orient_block; ++k) {
          report.cells_masked += 1;
          if (out.labels[base + k]) {
            report.cells_previously_reachable_masked += 1;
            out.labels[base + k] = 0;
          }
        }
      }
    }
  }
  return {std::move(out), report};
}

std::pair<SdfGrid, MaskReport> embed_and_regenerate(const ReachabilityGrid& grid,
                                                    const Scene& obstacles,
                                                    const MetricParams& metric,
                                                    double hand_clearance,
                                                    const SdfOptions& opts) {
  auto [masked, report] = mask_obstacles(grid, obstacles, hand_clearance);
  const auto t0 = std::chrono::steady_clock::now();
  SdfGrid sdf = compute_sdf(masked, metric, opts);
  const auto t1 = std::chrono::steady_clock::now();
  report.regeneration_seconds = std::chrono::duration<double>(t1 - t0).count();
  return {std::move(sdf), report};
}

}  // namespace rg
