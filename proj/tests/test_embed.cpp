#include <doctest.h>

#include <reachgrasp/embed.hpp>

#include "fixtures.hpp"

using namespace rg;
using namespace rg::testing;

namespace {

ReachabilityGrid annulus_grid() {
  const ArmModel arm = planar_arm();
  OracleParams params;
  params.ik.position_only = true;
  params.ik.tol_pos = 1e-3;
  params.ik.restarts = 8;
  params.seed = 2;
  return generate_reachability(arm, planar_slice(1.0, 0.2), Scene::empty(), params);
}

}  // namespace

TEST_CASE("no overlap leaves the grid untouched") {
  const ReachabilityGrid g = annulus_grid();
  Scene far;
  far.add(Solid::sphere({5, 5, 5}, 0.2));
  const auto [masked, report] = mask_obstacles(g, far, 0.1);
  CHECK(report.cells_masked == 0);
  CHECK(report.cells_previously_reachable_masked == 0);
  CHECK(masked.labels == g.labels);
}

TEST_CASE("sphere masking covers a hand-countable neighborhood") {
  const ReachabilityGrid g = annulus_grid();
  Scene scene;
  scene.add(Solid::sphere({0.4, 0.0, 0.0}, 0.05));
  const double clearance = 0.1;
  const auto [masked, report] = mask_obstacles(g, scene, clearance);

  // Oracle: count lattice translations within clearance of the sphere.
  std::size_t expected = 0, expected_reachable = 0;
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    const Pose6 p = g.spec.pose_at(i);
    if (point_distance(scene.obstacles[0].solid, p.translation()) <= clearance) {
      ++expected;
      if (g.labels[i]) ++expected_reachable;
    }
  }
  CHECK(report.cells_masked == expected);
  CHECK(report.cells_previously_reachable_masked == expected_reachable);
  CHECK(expected > 0);

  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    const Pose6 p = g.spec.pose_at(i);
    const bool in_range =
        point_distance(scene.obstacles[0].solid, p.translation()) <= clearance;
    CHECK(masked.labels[i] == (in_range ? 0 : g.labels[i]));
  }
}

TEST_CASE("masking is monotone and idempotent") {
  const ReachabilityGrid g = annulus_grid();
  Scene one, two;
  one.add(Solid::sphere({0.4, 0.0, 0.0}, 0.05));
  two.add(Solid::sphere({0.4, 0.0, 0.0}, 0.05));
  two.add(Solid::box(Pose6{-0.4, 0.4, 0, 0, 0, 0}, {0.1, 0.1, 0.1}));

  const auto [m1, r1] = mask_obstacles(g, one, 0.1);
  const auto [m2, r2] = mask_obstacles(g, two, 0.1);
  // More obstacles can only clear more labels.
  CHECK(r2.cells_masked >= r1.cells_masked);
  for (std::size_t i = 0; i < g.labels.size(); ++i) CHECK(m2.labels[i] <= m1.labels[i]);

  const auto [m1b, r1b] = mask_obstacles(m1, one, 0.1);
  CHECK(m1b.labels == m1.labels);
  // The repeat pass masks the same cells but finds none still reachable.
  CHECK(r1b.cells_previously_reachable_masked == 0);
}

TEST_CASE("all orientations at a masked translation are cleared") {
  // Grid with live angular axes: masking must be orientation blind.
  const ArmModel arm = planar_arm();
  GridSpec6 s = planar_slice(0.8, 0.4);
  s.axes[5] = {-M_PI, M_PI, M_PI / 2, true};
  OracleParams params;
  params.ik.position_only = true;
  params.ik.restarts = 6;
  const ReachabilityGrid g = generate_reachability(arm, s, Scene::empty(), params);

  Scene scene;
  scene.add(Solid::sphere({0.4, 0.4, 0.0}, 0.05));
  const auto [masked, report] = mask_obstacles(g, scene, 0.15);
  CHECK(report.cells_masked % 4 == 0);  // whole orientation fibers
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    if (masked.labels[i] == g.labels[i]) continue;
    auto mi = g.spec.multi_index(i);
    for (int yi = 0; yi < 4; ++yi) {
      mi[5] = yi;
      CHECK(masked.labels[g.spec.index_of(mi)] == 0);
    }
  }
}

TEST_CASE("regenerated field repels the obstacle region") {
  const ReachabilityGrid g = annulus_grid();
  Scene scene;
  scene.add(Solid::sphere({0.5, 0.0, 0.0}, 0.05));
  MetricParams m;
  const SdfGrid before = compute_sdf(g, m);
  const auto [after, report] = embed_and_regenerate(g, scene, m, 0.12);
  CHECK(report.regeneration_seconds >= 0.0);
  CHECK(report.cells_masked > 0);

  // At the obstacle center the field must now be negative, and no cell's
  // reachability value may improve.
  CHECK(query_sdf(after, Pose6{0.5, 0, 0, 0, 0, 0}) < 0.0);
  // Shrinking the reachable set can only lower the field; allow one grid
  // step of wavefront-approximation slack.
  double slack = 0.0;
  for (int a = 0; a < 6; ++a)
    if (before.spec.axes[a].count() > 1)
      slack = std::max(slack, before.axis_step_length(a));
  for (std::size_t i = 0; i < before.values.size(); ++i)
    CHECK(after.values[i] <= before.values[i] + slack);
}

TEST_CASE("total occlusion leaves a degenerate grid") {
  const ReachabilityGrid g = annulus_grid();
  Scene everything;
  everything.add(Solid::box(Pose6{0, 0, 0, 0, 0, 0}, {5, 5, 5}));
  const auto [masked, report] = mask_obstacles(g, everything, 0.1);
  CHECK(report.cells_masked == g.labels.size());
  CHECK(masked.reachable_count() == 0);
  CHECK_THROWS_AS(compute_sdf(masked, MetricParams{}), DegenerateGridError);
}
