#include "reachgrasp/scene.hpp"

#include <random>

namespace rg {

namespace {

struct WorldCapsule {
  Eigen::Vector3d a, b;
  double radius;
  int link;  // owning link index
};

std::vector<WorldCapsule> world_link_capsules(const ArmModel& arm,
                                              const std::vector<Eigen::Isometry3d>& frames) {
  std::vector<WorldCapsule> out;
  const auto& geo = arm.link_geometry();
  for (size_t i = 0; i < geo.size(); ++i) {
    const Eigen::Isometry3d& t = frames[i];
    for (const CapsuleShape& c : geo[i].capsules)
      out.push_back({t * c.a, t * c.b, c.radius, static_cast<int>(i)});
    for (const SphereShape& s : geo[i].spheres)
      out.push_back({t * s.center, t * s.center, s.radius, static_cast<int>(i)});
  }
  return out;
}

}  // namespace

bool check_collision(const ArmModel& arm, const Eigen::VectorXd& q, const Scene& scene) {
  const auto frames = arm.link_frames(q);
  const auto caps = world_link_capsules(arm, frames);

  for (const WorldCapsule& c : caps) {
    for (const Obstacle& ob : scene.obstacles) {
      if (segment_distance(ob.solid, c.a, c.b) <= c.radius) return true;
    }
  }
  // Self collision between non-adjacent links.
  for (size_t i = 0; i < caps.size(); ++i) {
    for (size_t j = i + 1; j < caps.size(); ++j) {
      if (std::abs(caps[i].link - caps[j].link) <= 1) continue;
      const double d =
          segment_segment_distance(caps[i].a, caps[i].b, caps[j].a, caps[j].b);
      if (d <= caps[i].radius + caps[j].radius) return true;
    }
  }
  return false;
}

bool has_collision_free_ik(const ArmModel& arm, const Pose6& pose, const Scene& scene,
                           const IkParams& params) {
  const Eigen::Vector3d rel = pose.translation() - arm.base().translation();
  if (rel.norm() > arm.max_reach() + params.tol_pos) return false;

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < std::max(1, params.restarts); ++attempt) {
    Eigen::VectorXd q0(arm.dof());
    if (attempt == 0) {
      q0 = arm.mid_configuration();
    } else {
      for (int i = 0; i < arm.dof(); ++i) {
        const Joint& j = arm.joints()[static_cast<size_t>(i)];
        q0[i] = j.lower + unit(rng) * (j.upper - j.lower);
      }
    }
    IkParams single = params;
    if (auto q = arm.solve_ik_from(pose, q0, single)) {
      if (!check_collision(arm, *q, scene)) return true;
    }
  }
  return false;
}

}  // namespace rg
