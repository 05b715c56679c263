// rgp: reachability-aware grasp planning front end.
//
// Subcommands: gen-reach, gen-sdf, embed, plan, rank, sweep, curve.
// All report files are deterministic for a fixed seed; wall-clock timing
// goes to stderr only. Every run writes <out>.manifest with the input
// digests needed to reproduce it.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <reachgrasp/config.hpp>
#include <reachgrasp/digest.hpp>
#include <reachgrasp/embed.hpp>
#include <reachgrasp/planner.hpp>

namespace {

using namespace rg;

constexpr const char* kVersion = "1.0.0";
// Half-width of the object-centered translation box the planner samples in.
constexpr double kPlanBoxHalf = 0.25;
// Attempts charged when no archived grasp passes the oracle: one past the
// archive size, so "never" still enters means and paired comparisons.
int attempts_or_ceiling(const std::optional<std::size_t>& a, std::size_t n_results) {
  return a ? static_cast<int>(*a) : static_cast<int>(n_results) + 1;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string num(double v) { return fmt("%.17g", v); }

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic text sink; flushed and checked on save.
struct Report {
  std::ostringstream out;
  void line(const std::string& s) { out << s << "\n"; }
  void save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    f << out.str();
    if (!f.good()) throw IoError("cannot write " + path);
  }
};

struct Manifest {
  std::string command;
  std::uint64_t seed = 0;
  int threads = 1;
  std::vector<std::pair<std::string, std::string>> files;   // key, path
  std::vector<std::pair<std::string, std::string>> params;  // key, value

  void file(const std::string& key, const std::string& path) {
    if (!path.empty()) files.emplace_back(key, path);
  }
  void param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }
  void save(const std::string& out_path) const {
    Report r;
    r.line("rgp-manifest v1");
    r.line("version " + std::string(kVersion));
    r.line("command " + command);
    r.line("seed " + std::to_string(seed));
    r.line("threads " + std::to_string(threads));
    for (const auto& [key, path] : files)
      r.line("input " + key + " " + path + " fnv1a:" + hex64(file_digest(path)));
    for (const auto& [key, value] : params) r.line("param " + key + " " + value);
    r.save(out_path + ".manifest");
  }
};

// Global flags plus the per-subcommand file options, with a JSON defaults
// file behind --config: any option not given on the command line falls back
// to the config value of the same name.
struct Args {
  std::string config, out;
  std::uint64_t seed = 0;
  int threads = 1;
  std::map<std::string, std::string> values;  // option name -> value
  std::map<std::string, std::string> scalars;

  std::string path(const std::string& key, bool required = false) const {
    auto it = values.find(key);
    if (it != values.end() && !it->second.empty()) return it->second;
    if (required) throw ConfigError("missing required input --" + key);
    return "";
  }
  double scalar(const std::string& key, double fallback) const {
    auto it = scalars.find(key);
    return it != scalars.end() ? std::stod(it->second) : fallback;
  }
  void merge_config() {
    if (config.empty()) return;
    std::ifstream f(config);
    if (!f) throw ConfigError("cannot open config file: " + config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(config + ": " + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      if (value.is_string()) {
        if (values.find(key) == values.end() || values[key].empty())
          values.emplace(key, value.get<std::string>());
        if (values[key].empty()) values[key] = value.get<std::string>();
      } else if (value.is_number() || value.is_boolean()) {
        if (scalars.find(key) == scalars.end())
          scalars[key] = value.dump();
      }
    }
  }
};

std::string describe_ik(const IkParams& p) {
  return fmt("tol_pos=%.17g;tol_rot=%.17g;max_iters=%d;restarts=%d;damping=%.17g;position_only=%d",
             p.tol_pos, p.tol_rot, p.max_iters, p.restarts, p.damping,
             p.position_only ? 1 : 0);
}

GridProvenance make_provenance(const Args& a, const std::string& arm_path,
                               const std::string& scene_path, const IkParams& ik) {
  GridProvenance prov;
  prov.arm_hash = hex64(file_digest(arm_path));
  prov.scene_hash = scene_path.empty() ? std::string("none")
                                       : hex64(file_digest(scene_path));
  prov.oracle = describe_ik(ik);
  prov.seed = a.seed;
  return prov;
}

void report_grid_counts(Report& r, const ReachabilityGrid& grid) {
  const std::size_t n = grid.labels.size();
  const std::size_t reach = grid.reachable_count();
  r.line("cells " + std::to_string(n));
  r.line("reachable " + std::to_string(reach));
  r.line("unreachable " + std::to_string(n - reach));
  r.line("reachable_fraction " + num(static_cast<double>(reach) / static_cast<double>(n)));
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- gen-reach

int cmd_gen_reach(const Args& a) {
  const ArmModel arm = load_arm(a.path("arm", true));
  const GridSpec6 spec = load_grid_spec(a.path("grid", true));
  const IkParams ik = load_ik_params(a.path("ik", true));
  const std::string scene_path = a.path("scene");
  const Scene scene = scene_path.empty() ? Scene::empty() : load_scene(scene_path);

  OracleParams params;
  params.ik = ik;
  params.seed = a.seed;
  params.threads = a.threads;

  const auto t0 = std::chrono::steady_clock::now();
  const ReachabilityGrid grid = generate_reachability(
      arm, spec, scene, params, make_provenance(a, a.path("arm"), scene_path, ik));
  std::fprintf(stderr, "generation: %.2f s\n", elapsed(t0));

  save_grid(grid, a.out);
  Report log;
  log.line("rgp gen-reach report");
  report_grid_counts(log, grid);
  log.save(a.out + ".log");

  Manifest m;
  m.command = "gen-reach";
  m.seed = a.seed;
  m.threads = a.threads;
  m.file("arm", a.path("arm"));
  m.file("grid", a.path("grid"));
  m.file("ik", a.path("ik"));
  m.file("scene", scene_path);
  m.save(a.out);
  return 0;
}

// ------------------------------------------------------------------ gen-sdf

void report_sdf_quality(Report& r, const SdfQuality& q) {
  r.line("samples " + std::to_string(q.n));
  r.line("tp " + std::to_string(q.tp));
  r.line("fp " + std::to_string(q.fp));
  r.line("tn " + std::to_string(q.tn));
  r.line("fn " + std::to_string(q.fn));
  r.line("accuracy " + num(q.accuracy));
  r.line("precision " + num(q.precision));
  r.line("recall " + num(q.recall));
}

int cmd_gen_sdf(const Args& a) {
  const ReachabilityGrid grid = load_grid(a.path("grid", true));
  const std::string metric_path = a.path("metric");
  const MetricParams metric =
      metric_path.empty() ? MetricParams{} : load_metric(metric_path);

  const auto t0 = std::chrono::steady_clock::now();
  SdfGrid sdf = compute_sdf(grid, metric);
  std::fprintf(stderr, "sdf: %.2f s\n", elapsed(t0));

  save_sdf(sdf, a.out);
  Report log;
  log.line("rgp gen-sdf report");
  log.line("cells " + std::to_string(sdf.values.size()));
  double lo = sdf.values[0], hi = sdf.values[0];
  for (double v : sdf.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  log.line("value_min " + num(lo));
  log.line("value_max " + num(hi));

  const int evaluate = static_cast<int>(a.scalar("evaluate", 0));
  if (evaluate > 0) {
    const ArmModel arm = load_arm(a.path("arm", true));
    const IkParams ik = load_ik_params(a.path("ik", true));
    const std::string scene_path = a.path("scene");
    const Scene scene = scene_path.empty() ? Scene::empty() : load_scene(scene_path);
    const auto tq = std::chrono::steady_clock::now();
    const SdfQuality q = evaluate_sdf_quality(sdf, arm, scene,
                                              static_cast<std::size_t>(evaluate), ik,
                                              a.seed);
    std::fprintf(stderr, "quality: %.2f s\n", elapsed(tq));
    report_sdf_quality(log, q);
  }
  log.save(a.out + ".log");

  Manifest m;
  m.command = "gen-sdf";
  m.seed = a.seed;
  m.threads = a.threads;
  m.file("grid", a.path("grid"));
  m.file("metric", metric_path);
  m.file("arm", a.path("arm"));
  m.file("ik", a.path("ik"));
  m.file("scene", a.path("scene"));
  m.param("evaluate", std::to_string(evaluate));
  m.save(a.out);
  return 0;
}

// -------------------------------------------------------------------- embed

int cmd_embed(const Args& a) {
  const ReachabilityGrid grid = load_grid(a.path("grid", true));
  const Scene scene = load_scene(a.path("scene", true));
  const std::string metric_path = a.path("metric");
  const MetricParams metric =
      metric_path.empty() ? MetricParams{} : load_metric(metric_path);

  double clearance = a.scalar("clearance", -1.0);
  if (clearance < 0.0) {
    const std::string gripper_path = a.path("gripper");
    clearance = gripper_path.empty() ? Gripper::parallel_jaw().bounding_radius()
                                     : load_gripper(gripper_path).bounding_radius();
  }

  const auto [sdf, mask] = embed_and_regenerate(grid, scene, metric, clearance);
  std::fprintf(stderr, "regeneration: %.3f s\n", mask.regeneration_seconds);

  save_sdf(sdf, a.out);
  Report log;
  log.line("rgp embed report");
  log.line("hand_clearance " + num(clearance));
  log.line("cells_masked " + std::to_string(mask.cells_masked));
  log.line("cells_previously_reachable_masked " +
           std::to_string(mask.cells_previously_reachable_masked));
  log.save(a.out + ".log");

  Manifest m;
  m.command = "embed";
  m.seed = a.seed;
  m.threads = a.threads;
  m.file("grid", a.path("grid"));
  m.file("scene", a.path("scene"));
  m.file("metric", metric_path);
  m.file("gripper", a.path("gripper"));
  m.param("clearance", num(clearance));
  m.save(a.out);
  return 0;
}

// --------------------------------------------------------------------- plan

PlannerBounds object_bounds(const GraspObject& obj) {
  const Eigen::Vector3d c = obj.solid.pose.translation();
  PlannerBounds b;
  b.lo = c - Eigen::Vector3d::Constant(kPlanBoxHalf);
  b.hi = c + Eigen::Vector3d::Constant(kPlanBoxHalf);
  return b;
}

void report_results(Report& r, const std::vector<GraspResult>& results) {
  r.line("results " + std::to_string(results.size()));
  r.line("# rank x y z roll pitch yaw dof... : e_p e_contact e_reach total stable reachable found_at_step");
  for (std::size_t i = 0; i < results.size(); ++i) {
    const GraspResult& g = results[i];
    std::string line = std::to_string(i + 1);
    const Pose6& p = g.config.pose;
    for (double v : {p.x, p.y, p.z, p.roll, p.pitch, p.yaw}) line += " " + num(v);
    for (int k = 0; k < g.config.dof.size(); ++k) line += " " + num(g.config.dof[k]);
    line += " : " + num(g.breakdown.e_p) + " " + num(g.breakdown.e_contact) + " " +
            num(g.breakdown.e_reach) + " " + num(g.breakdown.total) + " " +
            std::string(g.breakdown.stable ? "stable" : "unstable") + " " +
            std::string(g.breakdown.reachable ? "reachable" : "unreachable") + " " +
            std::to_string(g.found_at_step);
    r.line(line);
  }
}

int cmd_plan(const Args& a) {
  const GraspObject obj = load_object(a.path("object", true));
  const Gripper gripper = load_gripper(a.path("gripper", true));
  PlannerConfig cfg = load_planner_config(a.path("planner", true));
  cfg.seed = a.seed;
  const int steps_override = static_cast<int>(a.scalar("steps", 0));
  if (steps_override > 0) cfg.steps = steps_override;

  const std::string sdf_path = a.path("sdf");
  SdfGrid sdf;
  const bool have_sdf = !sdf_path.empty();
  if (have_sdf) sdf = load_sdf(sdf_path);
  if (cfg.energy == EnergyKind::SaOurs && !have_sdf)
    throw ConfigError("sa-ours planning requires --sdf");

  const auto t0 = std::chrono::steady_clock::now();
  const auto results = plan_grasps(cfg, obj, gripper, object_bounds(obj),
                                   have_sdf ? &sdf : nullptr);
  std::fprintf(stderr, "plan: %.2f s\n", elapsed(t0));

  Report log;
  log.line("rgp plan report");
  log.line(std::string("energy ") +
           (cfg.energy == EnergyKind::SaOurs ? "sa-ours" : "sa-cp"));
  log.line("steps " + std::to_string(cfg.steps));
  log.line("seed " + std::to_string(cfg.seed));
  report_results(log, results);

  const std::string arm_path = a.path("arm");
  if (!arm_path.empty() && !results.empty()) {
    const ArmModel arm = load_arm(arm_path);
    const IkParams ik = load_ik_params(a.path("ik", true));
    const std::string scene_path = a.path("scene");
    const Scene scene = scene_path.empty() ? Scene::empty() : load_scene(scene_path);
    const double frac = reachable_fraction(results, arm, scene, ik);
    const auto attempts = required_plan_attempts(results, arm, scene, ik);
    log.line("reachable_fraction " + num(frac));
    log.line("required_plan_attempts " +
             (attempts ? std::to_string(*attempts) : std::string("none")));
    log.line("attempts_charged " +
             std::to_string(attempts_or_ceiling(attempts, results.size())));
  }
  log.save(a.out);

  Manifest m;
  m.command = "plan";
  m.seed = a.seed;
  m.threads = a.threads;
  for (const char* key : {"object", "gripper", "planner", "sdf", "arm", "ik", "scene"})
    m.file(key, a.path(key));
  m.param("steps", std::to_string(cfg.steps));
  m.save(a.out);
  return 0;
}

// --------------------------------------------------------------------- rank

int cmd_rank(const Args& a) {
  const auto grasps = load_grasp_list(a.path("grasps", true));
  const GraspObject obj = load_object(a.path("object", true));
  const Gripper gripper = load_gripper(a.path("gripper", true));
  const SdfGrid sdf = load_sdf(a.path("sdf", true));

  const auto ranked = rank_grasp_list(grasps, obj, gripper, sdf);
  Report log;
  log.line("rgp rank report");
  log.line("grasps " + std::to_string(ranked.size()));
  log.line("# rank input_index e_p e_contact e_reach total");
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const RankedGrasp& g = ranked[i];
    log.line(std::to_string(i + 1) + " " + std::to_string(g.input_index) + " " +
             num(g.breakdown.e_p) + " " + num(g.breakdown.e_contact) + " " +
             num(g.breakdown.e_reach) + " " + num(g.breakdown.total));
  }
  log.save(a.out);

  Manifest m;
  m.command = "rank";
  m.seed = a.seed;
  m.threads = a.threads;
  for (const char* key : {"grasps", "object", "gripper", "sdf"}) m.file(key, a.path(key));
  m.save(a.out);
  return 0;
}

// -------------------------------------------------------------------- sweep

int cmd_sweep(const Args& a) {
  const ArmModel arm = load_arm(a.path("arm", true));
  const GridSpec6 spec = load_grid_spec(a.path("grid", true));
  const IkParams ik = load_ik_params(a.path("ik", true));
  const std::string scene_path = a.path("scene");
  const Scene scene = scene_path.empty() ? Scene::empty() : load_scene(scene_path);

  std::ifstream f(a.path("sweep", true));
  if (!f) throw ConfigError("cannot open sweep config");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sweep config: ") + e.what());
  }
  const std::size_t samples = j.value("samples", 2000);

  OracleParams params;
  params.ik = ik;
  params.seed = a.seed;
  params.threads = a.threads;
  const ReachabilityGrid grid = generate_reachability(arm, spec, scene, params);

  Report log;
  log.line("rgp sweep report");
  log.line("# res_lin_cm res_rot_rad ratio accuracy precision recall n");
  for (const auto& t : j.at("triples")) {
    MetricParams m;
    m.res_lin_cm = t.at(0);
    m.res_rot_rad = t.at(1);
    m.ratio = t.at(2);
    m.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const SdfGrid sdf = compute_sdf(grid, m);
    const SdfQuality q = evaluate_sdf_quality(sdf, arm, scene, samples, ik, a.seed);
    std::fprintf(stderr, "triple (%g, %g, %g): %.2f s\n", m.res_lin_cm, m.res_rot_rad,
                 m.ratio, elapsed(t0));
    log.line(num(m.res_lin_cm) + " " + num(m.res_rot_rad) + " " + num(m.ratio) + " " +
             num(q.accuracy) + " " + num(q.precision) + " " + num(q.recall) + " " +
             std::to_string(q.n));
  }
  log.save(a.out);

  Manifest m;
  m.command = "sweep";
  m.seed = a.seed;
  m.threads = a.threads;
  for (const char* key : {"arm", "grid", "ik", "scene", "sweep"}) m.file(key, a.path(key));
  m.save(a.out);
  return 0;
}

// -------------------------------------------------------------------- curve

struct CurveCell {
  double frac_sum = 0.0, frac_sq = 0.0;
  double attempts_sum = 0.0;
  int n = 0;
  void add(double frac, int attempts) {
    frac_sum += frac;
    frac_sq += frac * frac;
    attempts_sum += attempts;
    n += 1;
  }
  double mean() const { return frac_sum / n; }
  double stderr_() const {
    if (n < 2) return 0.0;
    const double var = (frac_sq - frac_sum * frac_sum / n) / (n - 1);
    return std::sqrt(std::max(var, 0.0) / n);
  }
};

int cmd_curve(const Args& a) {
  const ExperimentSpec suite = load_suite(a.path("suite", true));
  const ReachabilityGrid grid = load_grid(a.path("grid", true));
  const std::string metric_path = a.path("metric");
  const MetricParams metric =
      metric_path.empty() ? MetricParams{} : load_metric(metric_path);
  const ArmModel arm = load_arm(suite.arm_path);
  const Gripper gripper = load_gripper(suite.gripper_path);
  const IkParams ik = load_ik_params(suite.ik_path);
  PlannerConfig base_cfg = a.path("planner").empty()
                               ? PlannerConfig{}
                               : load_planner_config(a.path("planner"));

  const double clearance = suite.hand_clearance >= 0.0 ? suite.hand_clearance
                                                       : gripper.bounding_radius();
  const SdfGrid sdf = compute_sdf(grid, metric);

  const char* methods[] = {"sa-cp", "sa-ours", "sa-ours-embedded"};
  // cell key: (budget index, method index)
  std::map<std::pair<int, int>, CurveCell> cells;
  // Per-scene per-method fractions and attempts at the largest budget, for
  // the embedding and attempts summaries.
  Report detail;
  detail.line("# scene budget method reachable_fraction attempts_charged seed");

  for (const SuiteScene& scene : suite.scenes) {
    const bool cluttered = !scene.obstacles.obstacles.empty();
    SdfGrid embedded;
    if (cluttered) {
      const auto t0 = std::chrono::steady_clock::now();
      embedded = embed_and_regenerate(grid, scene.obstacles, metric, clearance).first;
      std::fprintf(stderr, "embed %s: %.2f s\n", scene.name.c_str(), elapsed(t0));
    }
    for (std::size_t bi = 0; bi < suite.step_budgets.size(); ++bi) {
      for (int mi = 0; mi < 3; ++mi) {
        const SdfGrid* field = mi == 0 ? nullptr : (mi == 2 && cluttered ? &embedded : &sdf);
        PlannerConfig cfg = base_cfg;
        cfg.steps = suite.step_budgets[bi];
        cfg.energy = mi == 0 ? EnergyKind::SaCp : EnergyKind::SaOurs;
        for (int si = 0; si < suite.seeds_per_condition; ++si) {
          cfg.seed = a.seed + static_cast<std::uint64_t>(si);
          const auto results =
              plan_grasps(cfg, scene.object, gripper, object_bounds(scene.object), field);
          if (results.empty()) continue;
          const double frac = reachable_fraction(results, arm, scene.obstacles, ik);
          const int attempts = attempts_or_ceiling(
              required_plan_attempts(results, arm, scene.obstacles, ik), results.size());
          cells[{static_cast<int>(bi), mi}].add(frac, attempts);
          detail.line(scene.name + " " + std::to_string(suite.step_budgets[bi]) + " " +
                      methods[mi] + " " + num(frac) + " " + std::to_string(attempts) +
                      " " + std::to_string(cfg.seed));
        }
      }
    }
    std::fprintf(stderr, "scene %s done\n", scene.name.c_str());
  }

  Report log;
  log.line("rgp curve report");
  log.line("# budget method mean_reachable_fraction stderr mean_attempts n");
  for (std::size_t bi = 0; bi < suite.step_budgets.size(); ++bi) {
    for (int mi = 0; mi < 3; ++mi) {
      const auto it = cells.find({static_cast<int>(bi), mi});
      if (it == cells.end() || it->second.n == 0) continue;
      const CurveCell& c = it->second;
      log.line(std::to_string(suite.step_budgets[bi]) + " " + methods[mi] + " " +
               num(c.mean()) + " " + num(c.stderr_()) + " " +
               num(c.attempts_sum / c.n) + " " + std::to_string(c.n));
    }
  }
  log.save(a.out);
  detail.save(a.out + ".detail");

  Manifest m;
  m.command = "curve";
  m.seed = a.seed;
  m.threads = a.threads;
  for (const char* key : {"suite", "grid", "metric", "planner"}) m.file(key, a.path(key));
  m.save(a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reachability-aware grasp planning tools"};
  app.require_subcommand(1);

  Args args;
  app.add_option("--config", args.config, "JSON file supplying option defaults");
  app.add_option("--seed", args.seed, "random seed");
  app.add_option("--out", args.out, "output path");
  app.add_option("--threads", args.threads, "worker threads");

  const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
      {"gen-reach", {"arm", "grid", "ik", "scene"}},
      {"gen-sdf", {"grid", "metric", "arm", "ik", "scene"}},
      {"embed", {"grid", "scene", "metric", "gripper"}},
      {"plan", {"object", "gripper", "planner", "sdf", "arm", "ik", "scene"}},
      {"rank", {"grasps", "object", "gripper", "sdf"}},
      {"sweep", {"arm", "grid", "ik", "scene", "sweep"}},
      {"curve", {"suite", "grid", "metric", "planner"}},
  };
  const std::map<std::string, std::vector<std::string>> scalar_opts = {
      {"gen-sdf", {"evaluate"}}, {"embed", {"clearance"}}, {"plan", {"steps"}}};

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, opts] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();
    for (const std::string& opt : opts)
      sub->add_option("--" + opt, args.values[opt], opt + " file");
    const auto it = scalar_opts.find(name);
    if (it != scalar_opts.end())
      for (const std::string& opt : it->second)
        sub->add_option("--" + opt, args.scalars[opt], opt);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    args.merge_config();
    // Empty-string scalar slots created by CLI11 must not shadow defaults.
    for (auto it = args.scalars.begin(); it != args.scalars.end();)
      it = it->second.empty() ? args.scalars.erase(it) : std::next(it);
    const std::string name = app.get_subcommands().front()->get_name();
    if (args.out.empty()) throw ConfigError("missing required --out");
    if (name == "gen-reach") return cmd_gen_reach(args);
    if (name == "gen-sdf") return cmd_gen_sdf(args);
    if (name == "embed") return cmd_embed(args);
    if (name == "plan") return cmd_plan(args);
    if (name == "rank") return cmd_rank(args);
    if (name == "sweep") return cmd_sweep(args);
    if (name == "curve") return cmd_curve(args);
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const DegenerateGridError& e) {
    std::fprintf(stderr, "degenerate input: %s\n", e.what());
    return 3;
  } catch (const GridIoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 4;
  } catch (const IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
