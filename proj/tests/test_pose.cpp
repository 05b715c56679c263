#include <doctest.h>

#include <random>
#include <reachgrasp/pose.hpp>

using namespace rg;

TEST_CASE("wrap_angle maps into [-pi, pi) and is idempotent") {
  CHECK(wrap_angle(M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(3 * M_PI) == doctest::Approx(-M_PI));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(rng);
    const double w = wrap_angle(a);
    CHECK(w >= -M_PI);
    CHECK(w < M_PI);
    CHECK(wrap_angle(w) == doctest::Approx(w).epsilon(1e-14));
  }
}

TEST_CASE("normalization preserves the rotation matrix") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    Pose6 p{0, 0, 0, u(rng), u(rng), u(rng)};
    const Pose6 n = p.normalized();
    CHECK((p.rotation() - n.rotation()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("composition with identity is the identity map") {
  const Pose6 p{0.3, -0.2, 0.9, 0.4, -1.1, 2.2};
  const Pose6 q = p.compose(Pose6::identity()).normalized();
  const Pose6 r = Pose6::identity().compose(p).normalized();
  for (const Pose6& c : {q, r}) {
    CHECK(c.x == doctest::Approx(p.x).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(p.y).epsilon(1e-12));
    CHECK(c.z == doctest::Approx(p.z).epsilon(1e-12));
    CHECK(c.roll == doctest::Approx(p.roll).epsilon(1e-12));
    CHECK(c.pitch == doctest::Approx(p.pitch).epsilon(1e-12));
    CHECK(c.yaw == doctest::Approx(p.yaw).epsilon(1e-12));
  }
}

TEST_CASE("isometry round trip recovers the pose") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Pose6 p = Pose6{u(rng), u(rng), u(rng), 3 * u(rng), 1.5 * u(rng), 3 * u(rng)}
                        .normalized();
    const Pose6 q = Pose6::from_isometry(p.isometry());
    CHECK((p.isometry().matrix() - q.isometry().matrix()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("rotation geodesic basics") {
  const Pose6 a{0, 0, 0, 0, 0, 0};
  const Pose6 b{0, 0, 0, 0, 0, M_PI / 2};
  CHECK(rotation_geodesic(a, a) == doctest::Approx(0.0));
  CHECK(rotation_geodesic(a, b) == doctest::Approx(M_PI / 2));
}
