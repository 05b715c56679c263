#include "reachgrasp/energy.hpp"

#include <algorithm>
#include <numeric>

namespace rg {

namespace {

// Dense two-phase simplex for: maximize c'x subject to Ax = b, x >= 0,
// with b >= 0. Returns false when infeasible. Bland's rule, so it cannot
// cycle. Problems here are tiny (7 rows, ~30 columns).
bool simplex_solve(const Eigen::MatrixXd& a_in, const Eigen::VectorXd& b,
                   const Eigen::VectorXd& c, Eigen::VectorXd& x) {
  const int m = static_cast<int>(a_in.rows());
  const int n = static_cast<int>(a_in.cols());
  const int total = n + m;  // original + artificial
  Eigen::MatrixXd tab(m, total);
  tab.leftCols(n) = a_in;
  tab.rightCols(m) = Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd rhs = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  auto pivot = [&](int row, int col) {
    const double p = tab(row, col);
    tab.row(row) /= p;
    rhs[row] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const double f = tab(r, col);
      if (f == 0.0) continue;
      tab.row(r) -= f * tab.row(row);
      rhs[r] -= f * rhs[row];
    }
    basis[row] = col;
  };

  auto run = [&](const Eigen::VectorXd& obj, int ncols) {
    for (int iter = 0; iter < 4000; ++iter) {
      // Reduced costs for maximization; Bland: smallest improving index.
      Eigen::VectorXd y(m);
      for (int i = 0; i < m; ++i) y[i] = obj[basis[i]];
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        const double red = obj[j] - y.dot(tab.col(j));
        if (red > 1e-10) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (tab(i, enter) > 1e-12) {
          const double ratio = rhs[i] / tab(i, enter);
          if (leave < 0 || ratio < best - 1e-15 ||
              (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return true;  // unbounded; caller caps the objective
      pivot(leave, enter);
    }
    return false;
  };

  // Phase 1: drive artificials out.
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total);
  phase1.tail(m).setConstant(-1.0);
  if (!run(phase1, total)) return false;
  double art = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) art += rhs[i];
  if (art > 1e-8) return false;  // infeasible

  // Pivot any lingering degenerate artificials out of the basis.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (std::abs(tab(i, j)) > 1e-9) { col = j; break; }
    if (col >= 0) pivot(i, col);
  }

  // Phase 2.
  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(total);
  phase2.head(n) = c;
  phase2.tail(m).setConstant(-1e9);  // keep artificials out
  if (!run(phase2, n)) return false;

  x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = rhs[i];
  return true;
}

using WrenchSet = std::vector<Eigen::Matrix<double, 6, 1>>;

WrenchSet cone_edge_wrenches(const std::vector<Contact>& contacts, double mu,
                             const Eigen::Vector3d& torque_origin, double torque_scale,
                             int cone_edges) {
  WrenchSet wrenches;
  for (const Contact& ct : contacts) {
    const Eigen::Vector3d n = -ct.normal;  // force pushes into the object
    Eigen::Vector3d t1 = n.cross(Eigen::Vector3d::UnitX());
    if (t1.norm() < 1e-6) t1 = n.cross(Eigen::Vector3d::UnitY());
    t1.normalize();
    const Eigen::Vector3d t2 = n.cross(t1);
    for (int k = 0; k < cone_edges; ++k) {
      const double phi = 2.0 * M_PI * k / cone_edges;
      const Eigen::Vector3d f =
          (n + mu * (std::cos(phi) * t1 + std::sin(phi) * t2)).normalized();
      Eigen::Matrix<double, 6, 1> w;
      w.head<3>() = f;
      w.tail<3>() = (ct.point - torque_origin).cross(f) / std::max(torque_scale, 1e-9);
      wrenches.push_back(w);
    }
  }
  return wrenches;
}

// Distance from the origin to the convex hull of the wrenches, by
// Frank-Wolfe on |W lambda|^2 over the simplex. Deterministic.
double hull_distance(const WrenchSet& w) {
  const int m = static_cast<int>(w.size());
  Eigen::VectorXd lambda = Eigen::VectorXd::Constant(m, 1.0 / m);
  Eigen::Matrix<double, 6, 1> p;
  auto point = [&](const Eigen::VectorXd& l) {
    Eigen::Matrix<double, 6, 1> s = Eigen::Matrix<double, 6, 1>::Zero();
    for (int i = 0; i < m; ++i) s += l[i] * w[static_cast<size_t>(i)];
    return s;
  };
  p = point(lambda);
  for (int it = 0; it < 300; ++it) {
    // Vertex minimizing the linearization <p, w_i>.
    int best = 0;
    double bv = p.dot(w[0]);
    for (int i = 1; i < m; ++i) {
      const double v = p.dot(w[static_cast<size_t>(i)]);
      if (v < bv) { bv = v; best = i; }
    }
    const Eigen::Matrix<double, 6, 1> d = w[static_cast<size_t>(best)] - p;
    const double dd = d.squaredNorm();
    if (dd < 1e-18) break;
    double gamma = std::clamp(-p.dot(d) / dd, 0.0, 1.0);
    lambda *= (1.0 - gamma);
    lambda[best] += gamma;
    p = point(lambda);
  }
  return p.norm();
}

}  // namespace

ClosureResult force_closure(const std::vector<Contact>& contacts, double mu,
                            const Eigen::Vector3d& torque_origin, double torque_scale,
                            int cone_edges) {
  ClosureResult res;
  if (contacts.size() < 2) {
    res.closed = false;
    res.residual = contacts.empty() ? kNoContactEnergy : 1.0;
    if (contacts.size() == 1) {
      const auto w = cone_edge_wrenches(contacts, mu, torque_origin, torque_scale, cone_edges);
      res.residual = hull_distance(w);
    }
    return res;
  }
  const WrenchSet w = cone_edge_wrenches(contacts, mu, torque_origin, torque_scale, cone_edges);
  const int m = static_cast<int>(w.size());

  // maximize delta subject to: sum_i (mu_i + delta) w_i = 0,
  //                            sum_i (mu_i + delta) = 1, mu >= 0, delta >= 0.
  // All cone edges must carry strictly positive weight for delta > 0, which
  // is the strict-interiority feasibility test.
  Eigen::MatrixXd a(7, m + 1);
  Eigen::VectorXd b(7), c(m + 1);
  Eigen::Matrix<double, 6, 1> wsum = Eigen::Matrix<double, 6, 1>::Zero();
  for (int i = 0; i < m; ++i) {
    a.block<6, 1>(0, i) = w[static_cast<size_t>(i)];
    wsum += w[static_cast<size_t>(i)];
  }
  a.block<6, 1>(0, m) = wsum;
  a.row(6).setOnes();
  a(6, m) = static_cast<double>(m);
  b << 0, 0, 0, 0, 0, 0, 1;
  c.setZero();
  c[m] = 1.0;

  Eigen::VectorXd x;
  if (simplex_solve(a, b, c, x)) {
    const double delta = x[m];
    if (delta > 1e-9) {
      res.closed = true;
      res.quality = delta * m;  // in (0, 1]; 1 at perfectly balanced edges
      return res;
    }
  }
  res.closed = false;
  res.residual = hull_distance(w);
  return res;
}

double contact_energy(const GraspConfig& g, const GraspObject& obj,
                      const Gripper& gripper, double beta) {
  const Eigen::Isometry3d hand = g.pose.isometry();
  double e = 0.0;
  for (const ContactSite& site : gripper.sites(g.dof)) {
    const Eigen::Vector3d p = hand * site.point;
    const Eigen::Vector3d inward = hand.linear() * site.inward;
    const SurfacePoint sp = closest_surface_point(obj.solid, p);
    // Interior sites are penalized by penetration depth, keeping the cost
    // continuous through the surface.
    const double dist = std::abs(sp.signed_distance);
    Eigen::Vector3d to_surface = sp.point - p;
    double cos_theta;
    if (to_surface.norm() > 1e-9) {
      cos_theta = inward.dot(to_surface.normalized());
    } else {
      // On the surface: alignment against the inward surface direction.
      cos_theta = inward.dot(-sp.normal);
    }
    e += dist + beta * (1.0 - cos_theta);
  }
  return e;
}

double potential_energy(const GraspConfig& g, const GraspObject& obj,
                        const Gripper& gripper) {
  // A site starting inside the object is not a grasp; the closing rays
  // would "contact" the interior.
  const Eigen::Isometry3d hand = g.pose.isometry();
  for (const ContactSite& site : gripper.sites(g.dof)) {
    if (closest_surface_point(obj.solid, hand * site.point).signed_distance < -1e-9)
      return kNoContactEnergy;
  }
  const auto contacts = close_fingers(g, obj, gripper);
  if (contacts.empty()) return kNoContactEnergy;
  const Eigen::Vector3d com = obj.solid.pose.translation();
  const ClosureResult cr =
      force_closure(contacts, obj.mu, com, obj.solid.bounding_radius());
  return cr.closed ? -cr.quality : cr.residual;
}

double reachability_energy(const SdfGrid& sdf, const Pose6& p) {
  try {
    return query_sdf(sdf, p);
  } catch (const OutOfDomainError&) {
    return -sdf.box_diagonal_length();
  }
}

double energy_sa_cp(const GraspConfig& g, const GraspObject& obj, const Gripper& gripper) {
  const double e_p = potential_energy(g, obj, gripper);
  if (e_p < 0.0) return e_p;
  return contact_energy(g, obj, gripper);
}

EnergyBreakdown combine_energy(double e_p, double e_contact, double e_reach,
                               const AlphaWeights& alpha) {
  EnergyBreakdown out;
  out.e_p = e_p;
  out.e_contact = e_contact;
  out.e_reach = e_reach;
  out.stable = e_p < 0.0;
  out.reachable = e_reach >= 0.0;
  if (out.reachable && out.stable) {
    out.total = e_p + alpha.a1 * e_reach;
  } else if (out.reachable) {
    out.total = e_contact + alpha.a2 * e_reach;
  } else {
    out.total = e_contact + alpha.a3 * e_reach;
  }
  return out;
}

EnergyBreakdown energy_sa_ours(const GraspConfig& g, const GraspObject& obj,
                               const Gripper& gripper, const SdfGrid& sdf,
                               const AlphaWeights& alpha) {
  const double e_p = potential_energy(g, obj, gripper);
  const double e_reach = reachability_energy(sdf, g.pose);
  const bool stable = e_p < 0.0;
  const bool reachable = e_reach >= 0.0;
  // contactEnergy is only evaluated on the branches that use it.
  const double e_contact =
      (reachable && stable) ? 0.0 : contact_energy(g, obj, gripper);
  return combine_energy(e_p, e_contact, e_reach, alpha);
}

std::vector<RankedGrasp> rank_grasp_list(const std::vector<GraspConfig>& grasps,
                                         const GraspObject& obj, const Gripper& gripper,
                                         const SdfGrid& sdf, const AlphaWeights& alpha) {
  if (grasps.empty()) throw std::invalid_argument("grasp list is empty");
  std::vector<RankedGrasp> out;
  out.reserve(grasps.size());
  for (std::size_t i = 0; i < grasps.size(); ++i) {
    RankedGrasp rg;
    rg.config = grasps[i];
    rg.breakdown = energy_sa_ours(grasps[i], obj, gripper, sdf, alpha);
    rg.input_index = i;
    out.push_back(std::move(rg));
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedGrasp& a, const RankedGrasp& b) {
    if (a.breakdown.total != b.breakdown.total) return a.breakdown.total < b.breakdown.total;
    return a.breakdown.e_reach > b.breakdown.e_reach;
  });
  return out;
}

}  // namespace rg
