#pragma once

#include <optional>

#include "reachgrasp/energy.hpp"

namespace rg {

enum class EnergyKind { SaCp, SaOurs };

struct PlannerConfig {
  int steps = 10000;
  double t_initial = 2.0;
  double t_floor = 0.01;     // geometric cooling ends here at the last step
  double pos_scale = 0.08;   // meters, proposal scale at T = t_initial
  double rot_scale = 0.6;    // radians
  double dof_scale = 0.25;   // fraction of each DOF range
  int keep_top_k = 20;
  std::uint64_t seed = 0;
  EnergyKind energy = EnergyKind::SaOurs;
  AlphaWeights alpha;
};

// Axis-aligned translation bounds for the annealing state; angles wrap and
// DOFs clamp to gripper limits.
struct PlannerBounds {
  Eigen::Vector3d lo{-1, -1, -1};
  Eigen::Vector3d hi{1, 1, 1};
};

// Optional per-step audit trail: the archive's worst retained energy
// (+inf until the archive holds keep_top_k entries).
struct PlanTrace {
  std::vector<double> archive_worst;
};

struct GraspResult {
  GraspConfig config;
  EnergyBreakdown breakdown;
  int found_at_step = 0;
};

// Simulated annealing over the 6+N grasp space: temperature-scaled Cauchy
// proposals, Metropolis acceptance, geometric cooling, and a top-k archive
// of distinct low-energy states. Deterministic for a fixed config.
std::vector<GraspResult> plan_grasps(const PlannerConfig& cfg, const GraspObject& obj,
                                     const Gripper& gripper, const PlannerBounds& bounds,
                                     const SdfGrid* sdf, PlanTrace* trace = nullptr);

// Fraction of results whose pose passes the collision-free-IK oracle.
double reachable_fraction(const std::vector<GraspResult>& results, const ArmModel& arm,
                          const Scene& scene, const IkParams& oracle);

// 1-based index of the first result passing the oracle; nullopt when none.
std::optional<std::size_t> required_plan_attempts(const std::vector<GraspResult>& results,
                                                  const ArmModel& arm, const Scene& scene,
                                                  const IkParams& oracle);

}  // namespace rg
