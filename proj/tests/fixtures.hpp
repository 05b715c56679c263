#pragma once

#include <reachgrasp/arm.hpp>
#include <reachgrasp/grid.hpp>

namespace rg::testing {

// 2-link planar arm in the xy plane, l1 = l2 = 0.5 m, both joints about z.
// Its reachable positions form the annulus |l1-l2| <= r <= l1+l2 around the
// base, which tests use as an analytic oracle.
inline ArmModel planar_arm(double l1 = 0.5, double l2 = 0.5) {
  std::vector<Joint> joints(2);
  joints[0].axis = {0, 0, 1};
  joints[0].lower = -M_PI;
  joints[0].upper = M_PI;
  joints[1].origin = Pose6{l1, 0, 0, 0, 0, 0};
  joints[1].axis = {0, 0, 1};
  joints[1].lower = -M_PI;
  joints[1].upper = M_PI;
  std::vector<LinkGeometry> geo(2);
  geo[0].capsules.push_back({{-l1, 0, 0}, {0, 0, 0}, 0.03});
  geo[1].capsules.push_back({{-l2, 0, 0}, {0, 0, 0}, 0.03});
  return ArmModel(Pose6{}, Pose6{l2, 0, 0, 0, 0, 0}, std::move(joints), std::move(geo),
                  "planar2");
}

// 6-DOF elbow arm used across the SDF/planner tests; mirrors
// configs/arm_desk6.json.
inline ArmModel desk_arm() {
  auto revolute = [](Eigen::Vector3d axis, Pose6 origin, double lo, double hi) {
    Joint j;
    j.axis = std::move(axis);
    j.origin = origin;
    j.lower = lo;
    j.upper = hi;
    return j;
  };
  std::vector<Joint> joints;
  joints.push_back(revolute({0, 0, 1}, Pose6{0, 0, 0.10, 0, 0, 0}, -3.05, 3.05));
  joints.push_back(revolute({0, 1, 0}, Pose6{0, 0, 0.05, 0, 0, 0}, -2.2, 2.2));
  joints.push_back(revolute({0, 1, 0}, Pose6{0, 0, 0.30, 0, 0, 0}, -2.5, 2.5));
  joints.push_back(revolute({0, 0, 1}, Pose6{0, 0, 0.25, 0, 0, 0}, -3.05, 3.05));
  joints.push_back(revolute({0, 1, 0}, Pose6{0, 0, 0.08, 0, 0, 0}, -2.0, 2.0));
  joints.push_back(revolute({0, 0, 1}, Pose6{0, 0, 0.08, 0, 0, 0}, -3.05, 3.05));
  std::vector<LinkGeometry> geo(6);
  geo[0].capsules.push_back({{0, 0, -0.10}, {0, 0, 0}, 0.05});
  geo[1].capsules.push_back({{0, 0, 0}, {0, 0, 0.30}, 0.045});
  geo[2].capsules.push_back({{0, 0, 0}, {0, 0, 0.25}, 0.04});
  geo[3].capsules.push_back({{0, 0, 0}, {0, 0, 0.08}, 0.035});
  geo[4].capsules.push_back({{0, 0, 0}, {0, 0, 0.08}, 0.03});
  geo[5].capsules.push_back({{0, 0, 0}, {0, 0, 0.05}, 0.03});
  return ArmModel(Pose6{}, Pose6{0, 0, 0.06, 0, 0, 0}, std::move(joints), std::move(geo),
                  "desk6");
}

// Planar-arm position slice: x/y spread over the annulus, all other axes
// collapsed to a single cell.
inline GridSpec6 planar_slice(double half = 1.1, double step = 0.1) {
  GridSpec6 spec;
  spec.axes[0] = {-half, half, step, false};
  spec.axes[1] = {-half, half, step, false};
  spec.axes[2] = {0, 0, 1.0, false};
  spec.axes[3] = {0, 0, 1.0, false};
  spec.axes[4] = {0, 0, 1.0, false};
  spec.axes[5] = {0, 0, 1.0, false};
  return spec;
}

}  // namespace rg::testing
