#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <reachgrasp/grid.hpp>

#include "fixtures.hpp"

using namespace rg;
using namespace rg::testing;

namespace {

GridSpec6 tiny_spec() {
  GridSpec6 s;
  s.axes[0] = {0.0, 0.1, 0.1, false};   // 2
  s.axes[1] = {0.0, 0.1, 0.1, false};   // 2
  s.axes[2] = {0.0, 0.0, 0.1, false};   // 1
  s.axes[3] = {-M_PI, M_PI, M_PI, true};  // 2
  s.axes[4] = {0.0, 0.0, 0.1, false};   // 1
  s.axes[5] = {0.0, 0.0, 0.1, false};   // 1
  return s;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("axis counts") {
  CHECK(AxisSpec{0.0, 1.0, 0.1, false}.count() == 11);
  CHECK(AxisSpec{-1.1, 1.1, 0.1, false}.count() == 23);
  CHECK(AxisSpec{-M_PI, M_PI, M_PI / 4, true}.count() == 8);
  CHECK(AxisSpec{-M_PI, M_PI, M_PI, true}.count() == 2);
  CHECK(AxisSpec{0.0, 0.0, 0.1, false}.count() == 1);
}

TEST_CASE("published workspace discretization yields 675840 poses") {
  // Non-cyclic extents are trimmed one step short of the nominal bound so
  // the endpoint-inclusive count matches the published lattice size.
  GridSpec6 s;
  s.axes[0] = {0.0, 1.1, 0.1, false};     // 12
  s.axes[1] = {-1.1, 1.0, 0.1, false};    // 22
  s.axes[2] = {0.0, 1.9, 0.1, false};     // 20
  s.axes[3] = {-M_PI, M_PI, M_PI, true};  // 2
  s.axes[4] = {-M_PI, M_PI, M_PI / 4, true};  // 8
  s.axes[5] = {-M_PI, M_PI, M_PI / 4, true};  // 8
  s.validate();
  CHECK(s.cell_count() == 675840u);
}

TEST_CASE("index round trip and pose placement") {
  GridSpec6 s = tiny_spec();
  s.validate();
  REQUIRE(s.cell_count() == 8u);
  for (std::size_t i = 0; i < s.cell_count(); ++i) {
    CHECK(s.index_of(s.multi_index(i)) == i);
  }
  // Hand enumeration: yaw..roll fastest, x slowest.
  CHECK(s.multi_index(0) == std::array<int, 6>{0, 0, 0, 0, 0, 0});
  CHECK(s.multi_index(1) == std::array<int, 6>{0, 0, 0, 1, 0, 0});
  CHECK(s.multi_index(2) == std::array<int, 6>{0, 1, 0, 0, 0, 0});
  CHECK(s.multi_index(4) == std::array<int, 6>{1, 0, 0, 0, 0, 0});

  const Pose6 p = s.pose_at({1, 1, 0, 1, 0, 0});
  CHECK(p.x == doctest::Approx(0.1));
  CHECK(p.y == doctest::Approx(0.1));
  // roll index 1 lands at -pi + pi = 0.
  CHECK(p.roll == doctest::Approx(0.0));
}

TEST_CASE("cyclic axis poses stay in the principal range") {
  GridSpec6 s = tiny_spec();
  s.axes[3] = {-M_PI, M_PI, M_PI / 4, true};
  s.validate();
  for (const Pose6& p : uniform_sample_workspace(s)) {
    CHECK(p.roll >= -M_PI);
    CHECK(p.roll < M_PI);
  }
}

TEST_CASE("spec validation rejects bad axes") {
  GridSpec6 s = tiny_spec();
  s.axes[0].cyclic = true;  // translational axes cannot wrap
  CHECK_THROWS(s.validate());
  s = tiny_spec();
  s.axes[3] = {-M_PI, M_PI / 2, M_PI / 4, true};  // cyclic span must be 2pi
  CHECK_THROWS(s.validate());
  s = tiny_spec();
  s.axes[1].step = 0.0;
  CHECK_THROWS(s.validate());
  s = tiny_spec();
  s.axes[2] = {0.5, 0.0, 0.1, false};
  CHECK_THROWS(s.validate());
}

TEST_CASE("planar annulus rasterizes as expected") {
  const ArmModel arm = planar_arm();
  GridSpec6 s = planar_slice(0.9, 0.3);
  OracleParams params;
  params.ik.position_only = true;
  params.ik.tol_pos = 1e-3;
  params.ik.restarts = 10;
  params.seed = 7;

  const ReachabilityGrid grid = generate_reachability(arm, s, Scene::empty(), params);
  REQUIRE(grid.labels.size() == s.cell_count());
  const double margin = params.ik.tol_pos;
  for (std::size_t i = 0; i < grid.labels.size(); ++i) {
    const Pose6 p = s.pose_at(i);
    const double r = std::hypot(p.x, p.y);
    // Reachable set is the unit disk (l1 = l2, so no inner hole).
    if (r < 1.0 - 10 * margin) CHECK(grid.labels[i] == 1);
    if (r > 1.0 + 10 * margin) CHECK(grid.labels[i] == 0);
  }
  CHECK(grid.reachable_count() > 0);
  CHECK(grid.reachable_count() < grid.labels.size());
}

TEST_CASE("labels are independent of thread count and sub-block consistent") {
  const ArmModel arm = planar_arm();
  GridSpec6 s = planar_slice(0.8, 0.4);
  OracleParams params;
  params.ik.position_only = true;
  params.ik.restarts = 6;
  params.seed = 11;

  params.threads = 1;
  const ReachabilityGrid a = generate_reachability(arm, s, Scene::empty(), params);
  params.threads = 3;
  const ReachabilityGrid b = generate_reachability(arm, s, Scene::empty(), params);
  CHECK(a.labels == b.labels);
}

TEST_CASE("RGRD round trip preserves everything") {
  const ArmModel arm = planar_arm();
  GridSpec6 s = planar_slice(0.8, 0.4);
  OracleParams params;
  params.ik.position_only = true;
  params.ik.restarts = 4;
  params.seed = 13;
  GridProvenance prov{"deadbeef01234567", "cafef00d89abcdef", "restarts=4", 13};
  const ReachabilityGrid grid =
      generate_reachability(arm, s, Scene::empty(), params, prov);

  const std::string path = temp_path("rg_roundtrip.rgrd");
  save_grid(grid, path);
  const ReachabilityGrid back = load_grid(path);

  CHECK(back.labels == grid.labels);
  CHECK(back.provenance == grid.provenance);
  for (int a = 0; a < 6; ++a) {
    CHECK(back.spec.axes[a].min == doctest::Approx(grid.spec.axes[a].min));
    CHECK(back.spec.axes[a].step == doctest::Approx(grid.spec.axes[a].step));
    CHECK(back.spec.axes[a].cyclic == grid.spec.axes[a].cyclic);
    CHECK(back.spec.axes[a].count() == grid.spec.axes[a].count());
  }
  std::remove(path.c_str());
}

TEST_CASE("grid loader rejects corrupted files") {
  const ArmModel arm = planar_arm();
  GridSpec6 s = planar_slice(0.5, 0.5);
  OracleParams params;
  params.ik.position_only = true;
  params.ik.restarts = 3;
  const ReachabilityGrid grid = generate_reachability(arm, s, Scene::empty(), params);

  const std::string path = temp_path("rg_corrupt.rgrd");
  save_grid(grid, path);

  SUBCASE("bad magic") {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.write("NOPE", 4);
    f.close();
    CHECK_THROWS_AS(load_grid(path), GridIoError);
  }
  SUBCASE("flipped label bit fails the checksum") {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekg(0, std::ios::end);
    const auto size = f.tellg();
    f.seekg(static_cast<std::streamoff>(size) - 6);
    char c;
    f.read(&c, 1);
    c = static_cast<char>(c ^ 0x1);
    f.seekp(static_cast<std::streamoff>(size) - 6);
    f.write(&c, 1);
    f.close();
    CHECK_THROWS_AS(load_grid(path), GridIoError);
  }
  SUBCASE("truncation") {
    std::error_code ec;
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 7, ec);
    REQUIRE(!ec);
    CHECK_THROWS_AS(load_grid(path), GridIoError);
  }
  std::remove(path.c_str());
}
