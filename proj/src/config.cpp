#include "reachgrasp/config.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace rg {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in " + path + ": " + e.what());
  }
}

Pose6 parse_pose(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 6)
    throw ConfigError(where + ": pose must be an array of 6 numbers");
  return Pose6{j[0], j[1], j[2], j[3], j[4], j[5]};
}

Eigen::Vector3d parse_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw ConfigError(where + ": expected an array of 3 numbers");
  return Eigen::Vector3d(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Solid parse_solid(const json& j, const std::string& where) {
  const std::string shape = j.value("shape", "");
  const Pose6 pose = j.contains("pose") ? parse_pose(j.at("pose"), where) : Pose6{};
  if (shape == "sphere") {
    const double r = j.at("radius");
    if (r <= 0.0) throw ConfigError(where + ": sphere radius must be positive");
    return Solid::sphere(pose.translation(), r);
  }
  if (shape == "box") {
    const Eigen::Vector3d he = parse_vec3(j.at("half_extents"), where);
    if (he.minCoeff() <= 0.0) throw ConfigError(where + ": box dimensions must be positive");
    return Solid::box(pose, he);
  }
  if (shape == "cylinder") {
    const double r = j.at("radius");
    const double hh = j.at("half_height");
    if (r <= 0.0 || hh <= 0.0)
      throw ConfigError(where + ": cylinder dimensions must be positive");
    return Solid::cylinder(pose, r, hh);
  }
  throw ConfigError(where + ": unknown shape '" + shape + "'");
}

Scene parse_scene(const json& j, const std::string& where) {
  Scene scene;
  for (const auto& ob : j.value("obstacles", json::array())) {
    scene.add(parse_solid(ob, where), ob.value("tag", ""));
  }
  return scene;
}

}  // namespace

ArmModel load_arm(const std::string& path) {
  const json j = read_json(path);
  try {
    const Pose6 base = j.contains("base") ? parse_pose(j.at("base"), path) : Pose6{};
    const Pose6 tool = j.contains("tool") ? parse_pose(j.at("tool"), path) : Pose6{};
    std::vector<Joint> joints;
    for (const auto& jj : j.at("joints")) {
      Joint joint;
      const std::string type = jj.value("type", "revolute");
      if (type == "revolute") joint.type = Joint::Type::Revolute;
      else if (type == "prismatic") joint.type = Joint::Type::Prismatic;
      else throw ConfigError(path + ": unknown joint type '" + type + "'");
      joint.axis = parse_vec3(jj.at("axis"), path).normalized();
      if (jj.contains("origin")) joint.origin = parse_pose(jj.at("origin"), path);
      const auto& lim = jj.at("limits");
      joint.lower = lim.at(0);
      joint.upper = lim.at(1);
      joints.push_back(joint);
    }
    std::vector<LinkGeometry> geometry;
    if (j.contains("link_geometry")) {
      for (const auto& lg : j.at("link_geometry")) {
        LinkGeometry g;
        for (const auto& prim : lg) {
          const std::string shape = prim.value("shape", "capsule");
          if (shape == "capsule") {
            g.capsules.push_back({parse_vec3(prim.at("a"), path),
                                  parse_vec3(prim.at("b"), path), prim.at("radius")});
          } else if (shape == "sphere") {
            g.spheres.push_back({parse_vec3(prim.at("center"), path), prim.at("radius")});
          } else {
            throw ConfigError(path + ": link geometry must be capsule or sphere");
          }
        }
        geometry.push_back(std::move(g));
      }
    }
    return ArmModel(base, tool, std::move(joints), std::move(geometry),
                    j.value("name", std::filesystem::path(path).stem().string()));
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Scene load_scene(const std::string& path) {
  try {
    return parse_scene(read_json(path), path);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Scene scene_from_json_text(const std::string& text) {
  try {
    return parse_scene(json::parse(text), "<inline scene>");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("inline scene: ") + e.what());
  }
}

GridSpec6 load_grid_spec(const std::string& path) {
  const json j = read_json(path);
  GridSpec6 spec;
  const std::array<const char*, 6> names = {"x", "y", "z", "roll", "pitch", "yaw"};
  try {
    for (int a = 0; a < 6; ++a) {
      const auto& ax = j.at("axes").at(names[static_cast<size_t>(a)]);
      AxisSpec& out = spec.axes[static_cast<size_t>(a)];
      out.min = ax.at("min");
      out.max = ax.at("max");
      out.step = ax.at("step");
      out.cyclic = ax.value("cyclic", false);
    }
    spec.validate();
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return spec;
}

Gripper load_gripper(const std::string& path) {
  const json j = read_json(path);
  try {
    const std::string type = j.at("type");
    if (type == "parallel_jaw") {
      return Gripper::parallel_jaw(j.value("max_aperture", 0.10),
                                   j.value("finger_length", 0.08));
    }
    if (type == "three_finger") {
      return Gripper::three_finger(j.value("max_aperture", 0.10),
                                   j.value("finger_length", 0.09),
                                   j.value("spread_min", 0.15), j.value("spread_max", 1.2));
    }
    throw ConfigError(path + ": unknown gripper type '" + type + "'");
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

GraspObject load_object(const std::string& path) {
  const json j = read_json(path);
  try {
    GraspObject obj;
    obj.solid = parse_solid(j, path);
    obj.mu = j.value("mu", 0.5);
    if (obj.mu <= 0.0) throw ConfigError(path + ": friction coefficient must be positive");
    return obj;
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

IkParams load_ik_params(const std::string& path) {
  const json j = read_json(path);
  IkParams p;
  p.tol_pos = j.value("tol_pos", p.tol_pos);
  p.tol_rot = j.value("tol_rot", p.tol_rot);
  p.max_iters = j.value("max_iters", p.max_iters);
  p.restarts = j.value("restarts", p.restarts);
  p.damping = j.value("damping", p.damping);
  p.position_only = j.value("position_only", p.position_only);
  if (p.tol_pos <= 0.0 || p.tol_rot <= 0.0)
    throw ConfigError(path + ": IK tolerances must be strictly positive");
  return p;
}

MetricParams load_metric(const std::string& path) {
  const json j = read_json(path);
  MetricParams m;
  m.res_lin_cm = j.value("res_lin_cm", m.res_lin_cm);
  m.res_rot_rad = j.value("res_rot_rad", m.res_rot_rad);
  m.ratio = j.value("ratio", m.ratio);
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return m;
}

PlannerConfig load_planner_config(const std::string& path) {
  const json j = read_json(path);
  PlannerConfig c;
  c.steps = j.value("steps", c.steps);
  c.t_initial = j.value("t_initial", c.t_initial);
  c.t_floor = j.value("t_floor", c.t_floor);
  c.pos_scale = j.value("pos_scale", c.pos_scale);
  c.rot_scale = j.value("rot_scale", c.rot_scale);
  c.dof_scale = j.value("dof_scale", c.dof_scale);
  c.keep_top_k = j.value("keep_top_k", c.keep_top_k);
  c.seed = j.value("seed", c.seed);
  const std::string energy = j.value("energy", "sa-ours");
  if (energy == "sa-cp") c.energy = EnergyKind::SaCp;
  else if (energy == "sa-ours") c.energy = EnergyKind::SaOurs;
  else throw ConfigError(path + ": energy must be 'sa-cp' or 'sa-ours'");
  if (j.contains("alpha")) {
    const auto& a = j.at("alpha");
    c.alpha.a1 = a.value("a1", c.alpha.a1);
    c.alpha.a2 = a.value("a2", c.alpha.a2);
    c.alpha.a3 = a.value("a3", c.alpha.a3);
  }
  if (c.steps < 1 || c.t_initial <= 0.0 || c.keep_top_k < 1)
    throw ConfigError(path + ": invalid planner configuration");
  return c;
}

std::vector<GraspConfig> load_grasp_list(const std::string& path) {
  const json j = read_json(path);
  std::vector<GraspConfig> out;
  try {
    for (const auto& g : j.at("grasps")) {
      GraspConfig cfg;
      cfg.pose = parse_pose(g.at("pose"), path);
      const auto& dof = g.at("dof");
      cfg.dof.resize(static_cast<Eigen::Index>(dof.size()));
      for (std::size_t i = 0; i < dof.size(); ++i)
        cfg.dof[static_cast<Eigen::Index>(i)] = dof[i];
      out.push_back(std::move(cfg));
    }
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return out;
}

ExperimentSpec load_suite(const std::string& path) {
  const json j = read_json(path);
  const auto dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (dir / fp).string();
  };
  ExperimentSpec spec;
  try {
    spec.arm_path = resolve(j.at("arm"));
    spec.gripper_path = resolve(j.at("gripper"));
    spec.ik_path = resolve(j.at("ik"));
    spec.seeds_per_condition = j.value("seeds_per_condition", 1);
    spec.hand_clearance = j.value("hand_clearance", -1.0);
    for (const auto& b : j.at("step_budgets")) spec.step_budgets.push_back(b);
    for (const auto& s : j.at("scenes")) {
      SuiteScene sc;
      sc.name = s.at("name");
      sc.object.solid = parse_solid(s.at("object"), path);
      sc.object.mu = s.at("object").value("mu", 0.5);
      sc.obstacles = parse_scene(s, path);
      spec.scenes.push_back(std::move(sc));
    }
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (spec.scenes.empty() || spec.step_budgets.empty() || spec.seeds_per_condition < 1)
    throw ConfigError(path + ": suite needs >= 1 scene, budget and seed");
  return spec;
}

}  // namespace rg
