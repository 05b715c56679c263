#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reachgrasp/pose.hpp"
#include "reachgrasp/primitives.hpp"

namespace rg {

struct Joint {
  enum class Type { Revolute, Prismatic };
  Type type = Type::Revolute;
  Eigen::Vector3d axis{0, 0, 1};  // unit, in the joint's local frame
  Pose6 origin;                   // fixed transform from the parent frame
  double lower = 0.0, upper = 0.0;
};

// Link collision geometry attached to the frame after joint i.
struct LinkGeometry {
  std::vector<CapsuleShape> capsules;  // local frame
  std::vector<SphereShape> spheres;
};

struct IkParams {
  double tol_pos = 5e-3;   // meters
  double tol_rot = 5e-2;   // radians, geodesic
  int max_iters = 60;
  int restarts = 8;
  double damping = 0.05;
  bool position_only = false;
  std::uint64_t seed = 0;
};

// A serial chain of revolute/prismatic joints with per-link collision
// capsules. Immutable after construction; all queries are const.
class ArmModel {
 public:
  ArmModel(Pose6 base, Pose6 tool, std::vector<Joint> joints,
           std::vector<LinkGeometry> link_geometry, std::string name = "arm");

  int dof() const { return static_cast<int>(joints_.size()); }
  const std::vector<Joint>& joints() const { return joints_; }
  const std::vector<LinkGeometry>& link_geometry() const { return link_geometry_; }
  const Pose6& base() const { return base_; }
  const Pose6& tool() const { return tool_; }
  const std::string& name() const { return name_; }

  // Upper bound on end-effector distance from the base origin.
  double max_reach() const { return max_reach_; }

  bool within_limits(const Eigen::VectorXd& q) const;
  Eigen::VectorXd clamp_to_limits(const Eigen::VectorXd& q) const;
  Eigen::VectorXd mid_configuration() const;

  // World frame of each link (frame after joint i), plus the tool frame last.
  std::vector<Eigen::Isometry3d> link_frames(const Eigen::VectorXd& q) const;

  Pose6 forward_kinematics(const Eigen::VectorXd& q) const;

  // Geometric Jacobian of the tool frame, 6 x dof ([v; w] rows).
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& q) const;

  // Damped-least-squares IK with random restarts. Returns a joint vector
  // whose forward kinematics is within tolerances of the target, or nothing
  // if no restart converged. Deterministic for a fixed params.seed.
  std::optional<Eigen::VectorXd> solve_ik(const Pose6& target,
                                          const IkParams& params) const;

  // Single local solve from a given start configuration.
  std::optional<Eigen::VectorXd> solve_ik_from(const Pose6& target,
                                               const Eigen::VectorXd& q0,
                                               const IkParams& params) const;

 private:
  Pose6 base_, tool_;
  std::vector<Joint> joints_;
  std::vector<LinkGeometry> link_geometry_;
  std::string name_;
  double max_reach_ = 0.0;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct JointLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace rg
