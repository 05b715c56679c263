#pragma once

#include <string>
#include <vector>

#include "reachgrasp/arm.hpp"
#include "reachgrasp/primitives.hpp"

namespace rg {

struct Obstacle {
  Solid solid;
  std::string tag;  // e.g. "table", "wall"; empty for movable clutter
};

// Immutable set of primitive obstacles.
struct Scene {
  std::vector<Obstacle> obstacles;

  static Scene empty() { return {}; }

  void add(const Solid& s, std::string tag = "") {
    obstacles.push_back({s, std::move(tag)});
  }
};

// True iff any arm link primitive at configuration q intersects an obstacle
// or a non-adjacent link primitive. Exact narrow-phase for the sphere /
// capsule link shapes against sphere / box / cylinder obstacles.
bool check_collision(const ArmModel& arm, const Eigen::VectorXd& q, const Scene& scene);

// The reachability oracle: true iff some IK restart yields a configuration
// that reaches `pose` and is collision free. Restart attempts share one
// seeded stream, so growing the restart budget only appends attempts.
bool has_collision_free_ik(const ArmModel& arm, const Pose6& pose, const Scene& scene,
                           const IkParams& params);

}  // namespace rg
