#pragma once

#include <vector>

#include "reachgrasp/pose.hpp"
#include "reachgrasp/primitives.hpp"

namespace rg {

// A hand pose plus gripper DOF values. N = 1 (aperture) for the parallel
// jaw, N = 2 (aperture, spread) for the three-finger gripper.
struct GraspConfig {
  Pose6 pose;
  Eigen::VectorXd dof;
};

// Primitive target object with a friction coefficient.
struct GraspObject {
  Solid solid;
  double mu = 0.5;
};

// A contact site on the hand: a point with the inward direction the finger
// closes along, expressed in the hand frame for the current DOF values.
struct ContactSite {
  Eigen::Vector3d point;
  Eigen::Vector3d inward;  // unit
  double travel = 0.0;     // how far this site can still close
};

// Desk-scale gripper: fingertip contact sites that close along straight
// rays. The site layout is a function of the DOF vector.
class Gripper {
 public:
  enum class Kind { ParallelJaw, ThreeFinger };

  static Gripper parallel_jaw(double max_aperture = 0.10, double finger_length = 0.08);
  static Gripper three_finger(double max_aperture = 0.10, double finger_length = 0.09,
                              double spread_min = 0.15, double spread_max = 1.2);

  Kind kind() const { return kind_; }
  int dof() const { return kind_ == Kind::ParallelJaw ? 1 : 2; }
  Eigen::VectorXd dof_lower() const { return dof_lower_; }
  Eigen::VectorXd dof_upper() const { return dof_upper_; }
  Eigen::VectorXd dof_mid() const { return (dof_lower_ + dof_upper_) / 2.0; }
  bool dof_valid(const Eigen::VectorXd& d) const;
  Eigen::VectorXd clamp_dof(const Eigen::VectorXd& d) const;

  // Radius of a sphere around the hand origin covering the fingers at full
  // aperture; the default obstacle-masking clearance.
  double bounding_radius() const;

  // Contact sites in the hand frame for the given DOF values.
  std::vector<ContactSite> sites(const Eigen::VectorXd& dof) const;

  double max_aperture() const { return max_aperture_; }
  double finger_length() const { return finger_length_; }

 private:
  Kind kind_ = Kind::ParallelJaw;
  double max_aperture_ = 0.10;
  double finger_length_ = 0.08;
  Eigen::VectorXd dof_lower_, dof_upper_;
};

// A finger-object contact produced by closing the gripper.
struct Contact {
  Eigen::Vector3d point;   // world
  Eigen::Vector3d normal;  // unit outward from the object surface
};

// Closes each finger along its ray until it meets the object surface.
// Fingers whose rays miss (or whose remaining travel is too short) make no
// contact.
std::vector<Contact> close_fingers(const GraspConfig& g, const GraspObject& obj,
                                   const Gripper& gripper);

}  // namespace rg
