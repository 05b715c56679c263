#pragma once

#include "reachgrasp/gripper.hpp"
#include "reachgrasp/sdf.hpp"

namespace rg {

// Quadrant weights for the reachability-aware energy; the defaults make
// deeper reachability lower the minimized energy in every branch.
struct AlphaWeights {
  double a1 = -0.1;   // reachable and stable
  double a2 = -10.0;  // reachable, not stable
  double a3 = -10.0;  // not reachable
};

struct EnergyBreakdown {
  double e_p = 0.0;
  double e_contact = 0.0;
  double e_reach = 0.0;
  double total = 0.0;
  bool stable = false;     // e_p < 0
  bool reachable = false;  // e_reach >= 0 (0 counts as reachable)
};

// Proximity-plus-alignment cost of the hand's contact sites to the object
// surface: sum of site-to-surface distance and beta * (1 - cos theta),
// where theta is the angle between the site's closing direction and the
// direction to its nearest surface point. Zero only at touching, aligned
// contact.
double contact_energy(const GraspConfig& g, const GraspObject& obj,
                      const Gripper& gripper, double beta = 0.1);

// Force-closure test on the friction-cone edge wrenches of a contact set.
// `quality` is the interiority margin of the origin in the wrench hull
// (positive iff closed); `residual` the distance from the origin to the
// hull when not closed.
struct ClosureResult {
  bool closed = false;
  double quality = 0.0;
  double residual = 0.0;
};

ClosureResult force_closure(const std::vector<Contact>& contacts, double mu,
                            const Eigen::Vector3d& torque_origin,
                            double torque_scale, int cone_edges = 8);

// Grasp stability term: closes the gripper onto the object, then runs the
// force-closure test. Negative (-quality) for closed grasps, positive
// residual otherwise; a contactless configuration returns a large positive
// constant.
double potential_energy(const GraspConfig& g, const GraspObject& obj,
                        const Gripper& gripper);

constexpr double kNoContactEnergy = 10.0;

// SDF lookup at the grasp pose; poses outside the grid box count as deeply
// unreachable (negative box-diagonal sentinel).
double reachability_energy(const SdfGrid& sdf, const Pose6& p);

// Contact-and-potential energy: e_p when stable, e_contact otherwise.
double energy_sa_cp(const GraspConfig& g, const GraspObject& obj, const Gripper& gripper);

// Reachability-aware energy: one of three branches combining the grasp
// terms with alpha-weighted e_reach.
EnergyBreakdown energy_sa_ours(const GraspConfig& g, const GraspObject& obj,
                               const Gripper& gripper, const SdfGrid& sdf,
                               const AlphaWeights& alpha = {});

// Recombines precomputed components through the same branch structure;
// shared by the planner and the audit tests.
EnergyBreakdown combine_energy(double e_p, double e_contact, double e_reach,
                               const AlphaWeights& alpha);

struct RankedGrasp {
  GraspConfig config;
  EnergyBreakdown breakdown;
  std::size_t input_index = 0;
};

// Stable ascending sort by total energy; ties broken by higher e_reach,
// then input order. Throws on an empty list.
std::vector<RankedGrasp> rank_grasp_list(const std::vector<GraspConfig>& grasps,
                                         const GraspObject& obj, const Gripper& gripper,
                                         const SdfGrid& sdf, const AlphaWeights& alpha = {});

}  // namespace rg
