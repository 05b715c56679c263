#include "reachgrasp/gripper.hpp"

namespace rg {

Gripper Gripper::parallel_jaw(double max_aperture, double finger_length) {
  Gripper g;
  g.kind_ = Kind::ParallelJaw;
  g.max_aperture_ = max_aperture;
  g.finger_length_ = finger_length;
  g.dof_lower_ = Eigen::VectorXd::Zero(1);
  g.dof_upper_ = Eigen::VectorXd::Constant(1, max_aperture);
  return g;
}

Gripper Gripper::three_finger(double max_aperture, double finger_length,
                              double spread_min, double spread_max) {
  Gripper g;
  g.kind_ = Kind::ThreeFinger;
  g.max_aperture_ = max_aperture;
  g.finger_length_ = finger_length;
  g.dof_lower_ = Eigen::VectorXd(2);
  g.dof_upper_ = Eigen::VectorXd(2);
  g.dof_lower_ << 0.0, spread_min;
  g.dof_upper_ << max_aperture, spread_max;
  return g;
}

bool Gripper::dof_valid(const Eigen::VectorXd& d) const {
  if (d.size() != dof()) return false;
  for (int i = 0; i < d.size(); ++i)
    if (d[i] < dof_lower_[i] - 1e-12 || d[i] > dof_upper_[i] + 1e-12) return false;
  return true;
}

Eigen::VectorXd Gripper::clamp_dof(const Eigen::VectorXd& d) const {
  Eigen::VectorXd out = d;
  for (int i = 0; i < out.size(); ++i)
    out[i] = std::clamp(out[i], dof_lower_[i], dof_upper_[i]);
  return out;
}

double Gripper::bounding_radius() const {
  return std::hypot(finger_length_, max_aperture_ / 2.0 + 0.01);
}

std::vector<ContactSite> Gripper::sites(const Eigen::VectorXd& dof) const {
  std::vector<ContactSite> out;
  if (kind_ == Kind::ParallelJaw) {
    // Fingers extend along +z, jaws separated along y by the aperture DOF.
    const double half = dof[0] / 2.0;
    out.push_back({{0.0, half, finger_length_}, {0.0, -1.0, 0.0}, half});
    out.push_back({{0.0, -half, finger_length_}, {0.0, 1.0, 0.0}, half});
  } else {
    // Two spread fingers opposing a thumb, all closing radially toward the
    // hand z-axis. dof = (radial aperture, spread half-angle).
    const double rad = dof[0];
    const double spread = dof[1];
    const std::array<double, 3> azimuth = {M_PI / 2.0 - spread, M_PI / 2.0 + spread,
                                           -M_PI / 2.0};
    for (double th : azimuth) {
      const Eigen::Vector3d dir(std::cos(th), std::sin(th), 0.0);
      out.push_back({dir * rad + Eigen::Vector3d(0, 0, finger_length_), -dir, rad});
    }
  }
  return out;
}

std::vector<Contact> close_fingers(const GraspConfig& g, const GraspObject& obj,
                                   const Gripper& gripper) {
  const Eigen::Isometry3d hand = g.pose.isometry();
  std::vector<Contact> contacts;
  for (const ContactSite& site : gripper.sites(g.dof)) {
    const Eigen::Vector3d o = hand * site.point;
    const Eigen::Vector3d d = hand.linear() * site.inward;
    const auto t = ray_hit(obj.solid, o, d);
    if (!t || *t > site.travel) continue;
    const Eigen::Vector3d p = o + (*t) * d;
    Contact c;
    c.point = p;
    c.normal = closest_surface_point(obj.solid, p + 1e-6 * (-d)).normal;
    // Degenerate normals (ray grazing an edge) fall back to the closing dir.
    if (!c.normal.allFinite() || c.normal.norm() < 0.5) c.normal = -d;
    contacts.push_back(c);
  }
  return contacts;
}

}  // namespace rg
