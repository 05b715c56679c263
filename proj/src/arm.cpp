#include "reachgrasp/arm.hpp"

#include <random>

namespace rg {

namespace {

Eigen::Isometry3d joint_motion(const Joint& j, double q) {
  Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
  if (j.type == Joint::Type::Revolute) {
    t.linear() = Eigen::AngleAxisd(q, j.axis).toRotationMatrix();
  } else {
    t.translation() = q * j.axis;
  }
  return t;
}

}  // namespace

ArmModel::ArmModel(Pose6 base, Pose6 tool, std::vector<Joint> joints,
                   std::vector<LinkGeometry> link_geometry, std::string name)
    : base_(base), tool_(tool), joints_(std::move(joints)),
      link_geometry_(std::move(link_geometry)), name_(std::move(name)) {
  for (const Joint& j : joints_) {
    if (j.lower > j.upper)
      throw std::invalid_argument("joint lower limit exceeds upper limit");
  }
  if (!link_geometry_.empty() && link_geometry_.size() != joints_.size())
    throw std::invalid_argument("link geometry count must match joint count");
  // Conservative reach bound: sum of fixed offsets plus prismatic travel.
  double reach = tool_.translation().norm();
  for (const Joint& j : joints_) {
    reach += j.origin.translation().norm();
    if (j.type == Joint::Type::Prismatic)
      reach += std::max(std::abs(j.lower), std::abs(j.upper));
  }
  max_reach_ = reach;
}

bool ArmModel::within_limits(const Eigen::VectorXd& q) const {
  if (q.size() != dof()) return false;
  for (int i = 0; i < dof(); ++i)
    if (q[i] < joints_[i].lower - 1e-12 || q[i] > joints_[i].upper + 1e-12)
      return false;
  return true;
}

Eigen::VectorXd ArmModel::clamp_to_limits(const Eigen::VectorXd& q) const {
  Eigen::VectorXd out = q;
  for (int i = 0; i < dof(); ++i)
    out[i] = std::clamp(out[i], joints_[i].lower, joints_[i].upper);
  return out;
}

Eigen::VectorXd ArmModel::mid_configuration() const {
  Eigen::VectorXd q(dof());
  for (int i = 0; i < dof(); ++i) q[i] = 0.5 * (joints_[i].lower + joints_[i].upper);
  return q;
}

std::vector<Eigen::Isometry3d> ArmModel::link_frames(const Eigen::VectorXd& q) const {
  if (q.size() != dof())
    throw DimensionMismatchError("joint vector length does not match arm dof");
  std::vector<Eigen::Isometry3d> frames;
  frames.reserve(joints_.size() + 1);
  Eigen::Isometry3d t = base_.isometry();
  for (size_t i = 0; i < joints_.size(); ++i) {
    t = t * joints_[i].origin.isometry() * joint_motion(joints_[i], q[static_cast<int>(i)]);
    frames.push_back(t);
  }
  frames.push_back(t * tool_.isometry());
  return frames;
}

Pose6 ArmModel::forward_kinematics(const Eigen::VectorXd& q) const {
  if (q.size() != dof())
    throw DimensionMismatchError("joint vector length does not match arm dof");
  if (!within_limits(q)) throw JointLimitError("configuration violates joint limits");
  return Pose6::from_isometry(link_frames(q).back());
}

Eigen::MatrixXd ArmModel::jacobian(const Eigen::VectorXd& q) const {
  const auto frames = link_frames(q);
  const Eigen::Vector3d tip = frames.back().translation();
  Eigen::MatrixXd jac(6, dof());
  Eigen::Isometry3d parent = base_.isometry();
  for (int i = 0; i < dof(); ++i) {
    const Eigen::Isometry3d at_joint = parent * joints_[static_cast<size_t>(i)].origin.isometry();
    const Eigen::Vector3d axis_w = at_joint.linear() * joints_[static_cast<size_t>(i)].axis;
    if (joints_[static_cast<size_t>(i)].type == Joint::Type::Revolute) {
      jac.block<3, 1>(0, i) = axis_w.cross(tip - at_joint.translation());
      jac.block<3, 1>(3, i) = axis_w;
    } else {
      jac.block<3, 1>(0, i) = axis_w;
      jac.block<3, 1>(3, i).setZero();
    }
    parent = frames[static_cast<size_t>(i)];
  }
  return jac;
}

std::optional<Eigen::VectorXd> ArmModel::solve_ik_from(const Pose6& target,
                                                       const Eigen::VectorXd& q0,
                                                       const IkParams& params) const {
  const Eigen::Vector3d target_p = target.translation();
  const Eigen::Matrix3d target_r = target.rotation();
  Eigen::VectorXd q = clamp_to_limits(q0);
  const int rows = params.position_only ? 3 : 6;
  for (int it = 0; it < params.max_iters; ++it) {
    const auto frames = link_frames(q);
    const Eigen::Isometry3d tip = frames.back();
    const Eigen::Vector3d pe = target_p - tip.translation();
    Eigen::Vector3d we = Eigen::Vector3d::Zero();
    if (!params.position_only) {
      Eigen::AngleAxisd rel(target_r * tip.linear().transpose());
      we = rel.angle() * rel.axis();
    }
    const double rot_err = params.position_only ? 0.0 : we.norm();
    if (pe.norm() <= params.tol_pos && rot_err <= params.tol_rot) return q;

    Eigen::MatrixXd jac = jacobian(q).topRows(rows);
    Eigen::VectorXd err(rows);
    err.head<3>() = pe;
    if (!params.position_only) err.tail<3>() = we;

    const Eigen::MatrixXd jt = jac.transpose();
    const Eigen::MatrixXd a =
        jac * jt + params.damping * params.damping * Eigen::MatrixXd::Identity(rows, rows);
    const Eigen::VectorXd dq = jt * a.ldlt().solve(err);
    // Step cap keeps the linearization honest far from the target.
    const double n = dq.norm();
    q = clamp_to_limits(q + (n > 0.5 ? dq * (0.5 / n) : dq));
  }
  // Accept the final iterate if it happens to satisfy the tolerances.
  const Pose6 fk = Pose6::from_isometry(link_frames(q).back());
  const double perr = (fk.translation() - target_p).norm();
  const double rerr = params.position_only ? 0.0 : rotation_geodesic(fk.rotation(), target_r);
  if (perr <= params.tol_pos && rerr <= params.tol_rot) return q;
  return std::nullopt;
}

std::optional<Eigen::VectorXd> ArmModel::solve_ik(const Pose6& target,
                                                  const IkParams& params) const {
  if (params.tol_pos <= 0.0 || params.tol_rot <= 0.0)
    throw std::invalid_argument("IK tolerances must be strictly positive");
  // Cheap reject: target beyond any possible reach.
  const Eigen::Vector3d rel = target.translation() - base_.translation();
  if (rel.norm() > max_reach_ + params.tol_pos) return std::nullopt;

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < std::max(1, params.restarts); ++attempt) {
    Eigen::VectorXd q0(dof());
    if (attempt == 0) {
      q0 = mid_configuration();
    } else {
      for (int i = 0; i < dof(); ++i) {
        const Joint& j = joints_[static_cast<size_t>(i)];
        q0[i] = j.lower + unit(rng) * (j.upper - j.lower);
      }
    }
    if (auto q = solve_ik_from(target, q0, params)) return q;
  }
  return std::nullopt;
}

}  // namespace rg
