#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <reachgrasp/config.hpp>

using namespace rg;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const char* name, const std::string& text) {
    path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream f(path);
    f << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("arm loader round trips a small chain") {
  TempFile f("rg_arm.json", R"({
    "name": "mini",
    "base": [0, 0, 0.1, 0, 0, 0],
    "tool": [0, 0, 0.05, 0, 0, 0],
    "joints": [
      {"type": "revolute", "axis": [0, 0, 1], "origin": [0, 0, 0.2, 0, 0, 0],
       "limits": [-1.5, 1.5]},
      {"type": "revolute", "axis": [0, 1, 0], "limits": [-2.0, 2.0]}
    ],
    "link_geometry": [
      [{"shape": "capsule", "a": [0, 0, 0], "b": [0, 0, 0.2], "radius": 0.04}],
      [{"shape": "sphere", "center": [0, 0, 0], "radius": 0.03}]
    ]
  })");
  const ArmModel arm = load_arm(f.path);
  CHECK(arm.name() == "mini");
  CHECK(arm.dof() == 2);
  CHECK(arm.joints()[0].upper == doctest::Approx(1.5));
  CHECK(arm.joints()[1].axis.y() == doctest::Approx(1.0));
  CHECK(arm.link_geometry()[0].capsules.size() == 1);
  CHECK(arm.link_geometry()[1].spheres.size() == 1);
  CHECK(arm.base().z == doctest::Approx(0.1));
}

TEST_CASE("arm loader rejects malformed inputs") {
  TempFile bad_type("rg_arm_bad1.json",
                    R"({"joints": [{"type": "spherical", "axis": [0,0,1], "limits": [0,1]}]})");
  CHECK_THROWS_AS(load_arm(bad_type.path), ConfigError);
  TempFile no_joints("rg_arm_bad2.json", R"({"name": "x"})");
  CHECK_THROWS_AS(load_arm(no_joints.path), ConfigError);
  TempFile not_json("rg_arm_bad3.json", "{joints: oops");
  CHECK_THROWS_AS(load_arm(not_json.path), ConfigError);
  CHECK_THROWS_AS(load_arm("/nonexistent/arm.json"), ConfigError);
}

TEST_CASE("scene loader") {
  TempFile f("rg_scene.json", R"({
    "obstacles": [
      {"shape": "sphere", "pose": [0.3, 0, 0.2, 0, 0, 0], "radius": 0.1, "tag": "ball"},
      {"shape": "box", "pose": [0, 0, -0.05, 0, 0, 0.4], "half_extents": [0.5, 0.5, 0.05]},
      {"shape": "cylinder", "radius": 0.04, "half_height": 0.2}
    ]
  })");
  const Scene scene = load_scene(f.path);
  REQUIRE(scene.obstacles.size() == 3);
  CHECK(scene.obstacles[0].tag == "ball");
  CHECK(scene.obstacles[0].solid.kind == Solid::Kind::Sphere);
  CHECK(scene.obstacles[1].solid.kind == Solid::Kind::Box);
  CHECK(scene.obstacles[2].solid.kind == Solid::Kind::Cylinder);
  CHECK(point_distance(scene.obstacles[0].solid, {0.3, 0, 0.2}) == doctest::Approx(0.0));

  CHECK(scene_from_json_text(R"({"obstacles": []})").obstacles.empty());
  CHECK_THROWS_AS(scene_from_json_text("]["), ConfigError);
  CHECK_THROWS_AS(
      scene_from_json_text(R"({"obstacles": [{"shape": "sphere", "radius": -1}]})"),
      ConfigError);
}

TEST_CASE("grid spec loader validates") {
  TempFile f("rg_grid.json", R"({
    "axes": {
      "x": {"min": 0.0, "max": 0.5, "step": 0.1},
      "y": {"min": -0.5, "max": 0.5, "step": 0.1},
      "z": {"min": 0.0, "max": 0.3, "step": 0.1},
      "roll": {"min": -3.14159265358979312, "max": 3.14159265358979312,
               "step": 3.14159265358979312, "cyclic": true},
      "pitch": {"min": 0.0, "max": 0.0, "step": 1.0},
      "yaw": {"min": 0.0, "max": 0.0, "step": 1.0}
    }
  })");
  const GridSpec6 spec = load_grid_spec(f.path);
  CHECK(spec.axes[0].count() == 6);
  CHECK(spec.axes[3].cyclic);
  CHECK(spec.axes[3].count() == 2);

  TempFile bad("rg_grid_bad.json", R"({
    "axes": {
      "x": {"min": 0.0, "max": 0.5, "step": 0.1, "cyclic": true},
      "y": {"min": 0, "max": 0, "step": 1}, "z": {"min": 0, "max": 0, "step": 1},
      "roll": {"min": 0, "max": 0, "step": 1}, "pitch": {"min": 0, "max": 0, "step": 1},
      "yaw": {"min": 0, "max": 0, "step": 1}
    }
  })");
  CHECK_THROWS_AS(load_grid_spec(bad.path), ConfigError);
}

TEST_CASE("gripper and object loaders") {
  TempFile jaw("rg_jaw.json", R"({"type": "parallel_jaw", "max_aperture": 0.12})");
  const Gripper g = load_gripper(jaw.path);
  CHECK(g.kind() == Gripper::Kind::ParallelJaw);
  CHECK(g.dof() == 1);
  CHECK(g.max_aperture() == doctest::Approx(0.12));

  TempFile tri("rg_tri.json", R"({"type": "three_finger"})");
  CHECK(load_gripper(tri.path).dof() == 2);

  TempFile badg("rg_badg.json", R"({"type": "suction"})");
  CHECK_THROWS_AS(load_gripper(badg.path), ConfigError);

  TempFile obj("rg_obj.json", R"({"shape": "cylinder", "radius": 0.03,
                                  "half_height": 0.08, "mu": 0.7})");
  const GraspObject o = load_object(obj.path);
  CHECK(o.solid.kind == Solid::Kind::Cylinder);
  CHECK(o.mu == doctest::Approx(0.7));
}

TEST_CASE("ik, metric and planner loaders apply defaults") {
  TempFile ik("rg_ik.json", R"({"restarts": 12, "position_only": true})");
  const IkParams p = load_ik_params(ik.path);
  CHECK(p.restarts == 12);
  CHECK(p.position_only);
  CHECK(p.tol_pos == doctest::Approx(5e-3));

  TempFile badik("rg_badik.json", R"({"tol_pos": 0})");
  CHECK_THROWS_AS(load_ik_params(badik.path), ConfigError);

  TempFile met("rg_metric.json", R"({"ratio": 2.5})");
  const MetricParams m = load_metric(met.path);
  CHECK(m.ratio == doctest::Approx(2.5));
  CHECK(m.res_lin_cm == doctest::Approx(10.0));

  TempFile pl("rg_planner.json", R"({"steps": 2500, "energy": "sa-cp",
                                     "alpha": {"a1": -0.2}})");
  const PlannerConfig c = load_planner_config(pl.path);
  CHECK(c.steps == 2500);
  CHECK(c.energy == EnergyKind::SaCp);
  CHECK(c.alpha.a1 == doctest::Approx(-0.2));
  CHECK(c.alpha.a2 == doctest::Approx(-10.0));

  TempFile badpl("rg_badpl.json", R"({"energy": "gradient"})");
  CHECK_THROWS_AS(load_planner_config(badpl.path), ConfigError);
}

TEST_CASE("grasp list loader") {
  TempFile f("rg_grasps.json", R"({"grasps": [
    {"pose": [0.1, 0, 0.2, 3.14, 0, 0], "dof": [0.06]},
    {"pose": [0, 0.1, 0.2, 3.14, 0, 1.57], "dof": [0.05, 0.4]}
  ]})");
  const auto grasps = load_grasp_list(f.path);
  REQUIRE(grasps.size() == 2);
  CHECK(grasps[0].pose.x == doctest::Approx(0.1));
  CHECK(grasps[0].dof.size() == 1);
  CHECK(grasps[1].dof.size() == 2);
  CHECK(grasps[1].dof[1] == doctest::Approx(0.4));

  TempFile bad("rg_grasps_bad.json", R"({"grasps": [{"pose": [1, 2, 3], "dof": []}]})");
  CHECK_THROWS_AS(load_grasp_list(bad.path), ConfigError);
}

TEST_CASE("suite loader resolves relative paths") {
  const auto dir = std::filesystem::temp_directory_path() / "rg_suite_dir";
  std::filesystem::create_directories(dir);
  {
    std::ofstream((dir / "arm.json")) << R"({"joints": [
      {"axis": [0,0,1], "limits": [-1, 1]}]})";
    std::ofstream((dir / "grip.json")) << R"({"type": "parallel_jaw"})";
    std::ofstream((dir / "ik.json")) << "{}";
    std::ofstream((dir / "suite.json")) << R"({
      "arm": "arm.json", "gripper": "grip.json", "ik": "ik.json",
      "step_budgets": [100, 1000], "seeds_per_condition": 3,
      "scenes": [
        {"name": "ball_free",
         "object": {"shape": "sphere", "pose": [0.4, 0, 0.2, 0, 0, 0],
                    "radius": 0.03, "mu": 0.6},
         "obstacles": []},
        {"name": "ball_shelf",
         "object": {"shape": "sphere", "pose": [0.4, 0, 0.2, 0, 0, 0], "radius": 0.03},
         "obstacles": [{"shape": "box", "pose": [0.4, 0, 0.35, 0, 0, 0],
                        "half_extents": [0.2, 0.2, 0.01], "tag": "shelf"}]}
      ]
    })";
  }
  const ExperimentSpec spec = load_suite((dir / "suite.json").string());
  CHECK(spec.arm_path == (dir / "arm.json").string());
  CHECK(spec.step_budgets == std::vector<int>{100, 1000});
  CHECK(spec.seeds_per_condition == 3);
  REQUIRE(spec.scenes.size() == 2);
  CHECK(spec.scenes[0].name == "ball_free");
  CHECK(spec.scenes[0].object.mu == doctest::Approx(0.6));
  CHECK(spec.scenes[1].obstacles.obstacles.size() == 1);
  CHECK(spec.scenes[1].obstacles.obstacles[0].tag == "shelf");
  // Loaded paths must be loadable themselves.
  CHECK_NOTHROW(load_arm(spec.arm_path));
  CHECK_NOTHROW(load_gripper(spec.gripper_path));
  CHECK_NOTHROW(load_ik_params(spec.ik_path));
  std::filesystem::remove_all(dir);
}
