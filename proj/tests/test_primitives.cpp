#include <doctest.h>

#include <random>
#include <reachgrasp/primitives.hpp>

using namespace rg;

TEST_CASE("point distances to the three solids") {
  const Solid sphere = Solid::sphere({0, 0, 0}, 0.5);
  CHECK(point_distance(sphere, {2, 0, 0}) == doctest::Approx(1.5));
  CHECK(point_distance(sphere, {0.1, 0, 0}) == 0.0);

  const Solid box = Solid::box(Pose6{}, {1, 1, 1});
  CHECK(point_distance(box, {3, 0, 0}) == doctest::Approx(2.0));
  CHECK(point_distance(box, {2, 2, 0}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(point_distance(box, {0.5, -0.5, 0.2}) == 0.0);

  const Solid cyl = Solid::cylinder(Pose6{}, 0.5, 1.0);
  CHECK(point_distance(cyl, {1.5, 0, 0}) == doctest::Approx(1.0));
  CHECK(point_distance(cyl, {0, 0, 2.0}) == doctest::Approx(1.0));
  CHECK(point_distance(cyl, {1.0, 0, 1.5}) == doctest::Approx(std::hypot(0.5, 0.5)));
}

TEST_CASE("posed box distance") {
  const Solid box = Solid::box(Pose6{1, 0, 0, 0, 0, M_PI / 2}, {0.5, 0.25, 0.25});
  // Rotated 90 deg about z: long side now along y.
  CHECK(point_distance(box, {1, 1.0, 0}) == doctest::Approx(0.5));
  CHECK(point_distance(box, {1.5, 0, 0}) == doctest::Approx(0.25));
}

TEST_CASE("surface points carry outward normals") {
  const Solid sphere = Solid::sphere({0, 0, 1}, 0.5);
  const SurfacePoint sp = closest_surface_point(sphere, {0, 0, 3});
  CHECK(sp.point.z() == doctest::Approx(1.5));
  CHECK(sp.normal.z() == doctest::Approx(1.0));
  CHECK(sp.signed_distance == doctest::Approx(1.5));

  const Solid box = Solid::box(Pose6{}, {1, 1, 1});
  const SurfacePoint inside = closest_surface_point(box, {0.9, 0.0, 0.0});
  CHECK(inside.signed_distance == doctest::Approx(-0.1));
  CHECK(inside.normal.x() == doctest::Approx(1.0));
  CHECK(inside.point.x() == doctest::Approx(1.0));
}

TEST_CASE("segment-solid distance agrees with dense point sampling") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const std::vector<Solid> solids = {
      Solid::sphere({0.2, -0.1, 0.3}, 0.4),
      Solid::box(Pose6{0, 0, 0, 0.3, 0.5, -0.2}, {0.4, 0.3, 0.55}),
      Solid::cylinder(Pose6{0.1, 0.1, 0, 0.9, 0, 0.4}, 0.35, 0.5),
  };
  for (const Solid& s : solids) {
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::Vector3d a{u(rng), u(rng), u(rng)};
      const Eigen::Vector3d b{u(rng), u(rng), u(rng)};
      const double d = segment_distance(s, a, b);
      double sampled = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 2000; ++k) {
        const double t = k / 2000.0;
        sampled = std::min(sampled, point_distance(s, a + t * (b - a)));
      }
      CHECK(d == doctest::Approx(sampled).epsilon(1e-4));
    }
  }
}

TEST_CASE("segment-segment distance") {
  CHECK(segment_segment_distance({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}) ==
        doctest::Approx(1.0));
  CHECK(segment_segment_distance({0, 0, 0}, {1, 0, 0}, {0.5, -1, 1}, {0.5, 1, 1}) ==
        doctest::Approx(1.0));
  // Crossing segments touch.
  CHECK(segment_segment_distance({-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}) ==
        doctest::Approx(0.0));
}

TEST_CASE("ray casts hit entry points") {
  const Solid sphere = Solid::sphere({0, 0, 0}, 0.5);
  auto t = ray_hit(sphere, {-2, 0, 0}, {1, 0, 0});
  REQUIRE(t);
  CHECK(*t == doctest::Approx(1.5));
  CHECK(!ray_hit(sphere, {-2, 1.0, 0}, {1, 0, 0}));
  CHECK(ray_hit(sphere, {0.1, 0, 0}, {1, 0, 0}).value() == doctest::Approx(0.0));

  const Solid box = Solid::box(Pose6{}, {0.5, 0.5, 0.5});
  t = ray_hit(box, {0, 0, 2}, {0, 0, -1});
  REQUIRE(t);
  CHECK(*t == doctest::Approx(1.5));
  CHECK(!ray_hit(box, {0, 0, 2}, {0, 0, 1}));

  const Solid cyl = Solid::cylinder(Pose6{}, 0.5, 0.3);
  t = ray_hit(cyl, {-3, 0, 0}, {1, 0, 0});
  REQUIRE(t);
  CHECK(*t == doctest::Approx(2.5));
  t = ray_hit(cyl, {0, 0, 2}, {0, 0, -1});
  REQUIRE(t);
  CHECK(*t == doctest::Approx(1.7));
  CHECK(!ray_hit(cyl, {0, 0.6, 2}, {0, 0, -1}));
}
