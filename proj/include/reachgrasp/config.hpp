#pragma once

#include <string>
#include <vector>

#include "reachgrasp/grid.hpp"
#include "reachgrasp/planner.hpp"

namespace rg {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON config loaders. All lengths are meters, all angles radians; the
// schemas are documented in README.md and mirrored by the files under
// configs/.

ArmModel load_arm(const std::string& path);
Scene load_scene(const std::string& path);
Scene scene_from_json_text(const std::string& text);
GridSpec6 load_grid_spec(const std::string& path);
Gripper load_gripper(const std::string& path);
GraspObject load_object(const std::string& path);
IkParams load_ik_params(const std::string& path);
MetricParams load_metric(const std::string& path);
PlannerConfig load_planner_config(const std::string& path);

// Grasp list for the ranking front end: [{"pose": [...6], "dof": [...]}].
std::vector<GraspConfig> load_grasp_list(const std::string& path);

// One scene of the experiment suite: a target object plus obstacles.
struct SuiteScene {
  std::string name;
  GraspObject object;
  Scene obstacles;
};

struct ExperimentSpec {
  std::string arm_path;
  std::string gripper_path;
  std::string ik_path;
  std::vector<SuiteScene> scenes;
  std::vector<int> step_budgets;
  int seeds_per_condition = 1;
  double hand_clearance = -1.0;  // < 0: use the gripper bounding radius
};

ExperimentSpec load_suite(const std::string& path);

}  // namespace rg
