#include "reachgrasp/planner.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace rg {

namespace {

struct State {
  GraspConfig config;
  EnergyBreakdown breakdown;
  double energy = 0.0;
};

EnergyBreakdown evaluate(const GraspConfig& g, const GraspObject& obj,
                         const Gripper& gripper, const SdfGrid* sdf,
                         const PlannerConfig& cfg) {
  const double e_p = potential_energy(g, obj, gripper);
  const double e_contact = contact_energy(g, obj, gripper);
  if (cfg.energy == EnergyKind::SaOurs) {
    return combine_energy(e_p, e_contact, reachability_energy(*sdf, g.pose), cfg.alpha);
  }
  EnergyBreakdown bd;
  bd.e_p = e_p;
  bd.e_contact = e_contact;
  bd.e_reach = 0.0;
  bd.stable = e_p < 0.0;
  bd.reachable = false;
  bd.total = bd.stable ? e_p : e_contact;
  return bd;
}

// De-duplication radius for the top-k archive.
bool distinct(const GraspConfig& a, const GraspConfig& b, const MetricParams& m,
              const Gripper& gripper) {
  if (metric_distance(a.pose, b.pose, m) > 0.25) return true;
  const Eigen::VectorXd range = gripper.dof_upper() - gripper.dof_lower();
  for (int i = 0; i < a.dof.size(); ++i)
    if (std::abs(a.dof[i] - b.dof[i]) > 0.05 * range[i]) return true;
  return false;
}

}  // namespace

std::vector<GraspResult> plan_grasps(const PlannerConfig& cfg, const GraspObject& obj,
                                     const Gripper& gripper, const PlannerBounds& bounds,
                                     const SdfGrid* sdf, PlanTrace* trace) {
  if (cfg.steps < 1 || cfg.t_initial <= 0.0 || cfg.keep_top_k < 1)
    throw std::invalid_argument("invalid planner configuration");
  if (cfg.energy == EnergyKind::SaOurs && sdf == nullptr)
    throw std::invalid_argument("SA-OURS requires a reachability SDF");
  if ((bounds.hi - bounds.lo).minCoeff() < 0.0)
    throw std::invalid_argument("invalid planner bounds");

  const MetricParams dedup_metric = sdf ? sdf->metric : MetricParams{};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto cauchy = [&](double scale) {
    // Heavy-tailed step; tails keep global moves alive at low temperature.
    return scale * std::tan(M_PI * (unit(rng) - 0.5));
  };

  // Initial state: hand above the object center along +z, fingers pointing
  // down, mid aperture.
  State current;
  const Eigen::Vector3d c = obj.solid.pose.translation();
  const double standoff = obj.solid.bounding_radius() + gripper.finger_length();
  current.config.pose = Pose6{c.x(), c.y(), std::min(c.z() + standoff, bounds.hi.z()),
                              M_PI, 0.0, 0.0}
                            .normalized();
  current.config.dof = gripper.dof_mid();
  current.breakdown = evaluate(current.config, obj, gripper, sdf, cfg);
  current.energy = current.breakdown.total;

  std::vector<GraspResult> archive;
  // Worst retained energy the last time the archive was full; admission
  // threshold once the archive has filled. Keeps the k-best worst energy
  // non-increasing even when crowd removal briefly shrinks the archive.
  double admit = std::numeric_limits<double>::infinity();
  auto offer = [&](const State& s, int step) {
    // A new state either loses to an equal-or-better near-duplicate or
    // displaces every entry it crowds, keeping the archive pairwise
    // distinct.
    for (const GraspResult& entry : archive) {
      if (!distinct(s.config, entry.config, dedup_metric, gripper) &&
          entry.breakdown.total <= s.energy) {
        return;
      }
    }
    archive.erase(std::remove_if(archive.begin(), archive.end(),
                                 [&](const GraspResult& entry) {
                                   return !distinct(s.config, entry.config,
                                                    dedup_metric, gripper);
                                 }),
                  archive.end());
    if (s.energy >= admit) return;
    GraspResult r;
    r.config = s.config;
    r.breakdown = s.breakdown;
    r.found_at_step = step;
    archive.push_back(std::move(r));
    if (static_cast<int>(archive.size()) > cfg.keep_top_k) {
      auto worst = std::max_element(archive.begin(), archive.end(),
                                    [](const GraspResult& a, const GraspResult& b) {
                                      return a.breakdown.total < b.breakdown.total;
                                    });
      archive.erase(worst);
    }
    if (static_cast<int>(archive.size()) == cfg.keep_top_k) {
      admit = -std::numeric_limits<double>::infinity();
      for (const GraspResult& e : archive) admit = std::max(admit, e.breakdown.total);
    }
  };
  offer(current, 0);

  auto record = [&] {
    if (trace) trace->archive_worst.push_back(admit);
  };
  record();

  const double cool =
      cfg.steps > 1 ? std::pow(cfg.t_floor / cfg.t_initial, 1.0 / (cfg.steps - 1)) : 1.0;
  double temperature = cfg.t_initial;

  for (int step = 1; step < cfg.steps; ++step) {
    const double scale = temperature / cfg.t_initial;
    GraspConfig prop = current.config;
    prop.pose.x = std::clamp(prop.pose.x + cauchy(cfg.pos_scale * scale), bounds.lo.x(), bounds.hi.x());
    prop.pose.y = std::clamp(prop.pose.y + cauchy(cfg.pos_scale * scale), bounds.lo.y(), bounds.hi.y());
    prop.pose.z = std::clamp(prop.pose.z + cauchy(cfg.pos_scale * scale), bounds.lo.z(), bounds.hi.z());
    prop.pose.roll = wrap_angle(prop.pose.roll + cauchy(cfg.rot_scale * scale));
    prop.pose.pitch = wrap_angle(prop.pose.pitch + cauchy(cfg.rot_scale * scale));
    prop.pose.yaw = wrap_angle(prop.pose.yaw + cauchy(cfg.rot_scale * scale));
    const Eigen::VectorXd range = gripper.dof_upper() - gripper.dof_lower();
    for (int i = 0; i < prop.dof.size(); ++i)
      prop.dof[i] += cauchy(cfg.dof_scale * range[i] * scale);
    prop.dof = gripper.clamp_dof(prop.dof);

    State next;
    next.config = prop;
    next.breakdown = evaluate(prop, obj, gripper, sdf, cfg);
    next.energy = next.breakdown.total;

    const double de = next.energy - current.energy;
    const double accept_draw = unit(rng);  // drawn unconditionally: keeps the
                                           // stream aligned across branches
    if (de <= 0.0 || std::exp(-de / temperature) > accept_draw) {
      current = next;
      offer(current, step);
    }
    record();
    temperature = std::max(temperature * cool, cfg.t_floor);
  }

  std::stable_sort(archive.begin(), archive.end(),
                   [](const GraspResult& a, const GraspResult& b) {
                     if (a.breakdown.total != b.breakdown.total)
                       return a.breakdown.total < b.breakdown.total;
                     return a.breakdown.e_reach > b.breakdown.e_reach;
                   });
  return archive;
}

double reachable_fraction(const std::vector<GraspResult>& results, const ArmModel& arm,
                          const Scene& scene, const IkParams& oracle) {
  if (results.empty()) throw std::invalid_argument("empty result list");
  std::size_t reachable = 0;
  for (const GraspResult& r : results)
    if (has_collision_free_ik(arm, r.config.pose, scene, oracle)) ++reachable;
  return static_cast<double>(reachable) / static_cast<double>(results.size());
}

std::optional<std::size_t> required_plan_attempts(const std::vector<GraspResult>& results,
                                                  const ArmModel& arm, const Scene& scene,
                                                  const IkParams& oracle) {
  if (results.empty()) throw std::invalid_argument("empty result list");
  for (std::size_t i = 0; i < results.size(); ++i)
    if (has_collision_free_ik(arm, results[i].config.pose, scene, oracle)) return i + 1;
  return std::nullopt;
}

}  // namespace rg
