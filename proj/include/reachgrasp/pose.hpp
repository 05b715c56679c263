#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace rg {

// Wraps an angle to the half-open interval [-pi, pi).
inline double wrap_angle(double a) {
  const double two_pi = 2.0 * M_PI;
  a = std::fmod(a + M_PI, two_pi);
  if (a < 0.0) a += two_pi;
  return a - M_PI;
}

// Smallest signed angular difference a-b, wrapped to [-pi, pi).
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

// A 6D hand pose: translation in meters, fixed-axis roll/pitch/yaw in
// radians. Rotation convention is R = Rz(yaw) * Ry(pitch) * Rx(roll).
struct Pose6 {
  double x = 0.0, y = 0.0, z = 0.0;
  double roll = 0.0, pitch = 0.0, yaw = 0.0;

  static Pose6 identity() { return {}; }

  Pose6 normalized() const {
    return {x, y, z, wrap_angle(roll), wrap_angle(pitch), wrap_angle(yaw)};
  }

  Eigen::Vector3d translation() const { return {x, y, z}; }

  Eigen::Matrix3d rotation() const {
    return (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
            Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
            Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
        .toRotationMatrix();
  }

  Eigen::Isometry3d isometry() const {
    Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
    t.translation() = translation();
    t.linear() = rotation();
    return t;
  }

  static Pose6 from_isometry(const Eigen::Isometry3d& t) {
    const Eigen::Matrix3d& r = t.linear();
    Pose6 p;
    p.x = t.translation().x();
    p.y = t.translation().y();
    p.z = t.translation().z();
    const double sp = -r(2, 0);
    if (std::abs(sp) > 1.0 - 1e-12) {
      // Gimbal lock: pitch = +-pi/2, roll folded into yaw.
      p.pitch = std::copysign(M_PI / 2.0, sp);
      p.roll = 0.0;
      p.yaw = std::atan2(-r(0, 1), r(1, 1));
    } else {
      p.pitch = std::asin(sp);
      p.yaw = std::atan2(r(1, 0), r(0, 0));
      p.roll = std::atan2(r(2, 1), r(2, 2));
    }
    return p.normalized();
  }

  Pose6 compose(const Pose6& other) const {
    return from_isometry(isometry() * other.isometry());
  }

  Pose6 inverse() const { return from_isometry(isometry().inverse()); }
};

// Geodesic angle between two orientations (angle of the relative rotation).
inline double rotation_geodesic(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  const double c = ((a.transpose() * b).trace() - 1.0) / 2.0;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

inline double rotation_geodesic(const Pose6& a, const Pose6& b) {
  return rotation_geodesic(a.rotation(), b.rotation());
}

}  // namespace rg
