#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reachgrasp/pose.hpp"
#include "reachgrasp/scene.hpp"

namespace rg {

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;
  bool cyclic = false;

  // Lattice-point count. Cyclic axes drop the max endpoint (it aliases min).
  int count() const;
};

// Per-axis discretization of the 6D workspace, axis order x,y,z,roll,pitch,yaw.
struct GridSpec6 {
  std::array<AxisSpec, 6> axes;

  void validate() const;
  std::array<int, 6> counts() const;
  std::size_t cell_count() const;

  // Row-major linear index, x slowest / yaw fastest.
  std::size_t index_of(const std::array<int, 6>& idx) const;
  std::array<int, 6> multi_index(std::size_t linear) const;

  Pose6 pose_at(const std::array<int, 6>& idx) const;
  Pose6 pose_at(std::size_t linear) const;
};

// One Pose6 per cell in row-major order.
std::vector<Pose6> uniform_sample_workspace(const GridSpec6& spec);

struct GridProvenance {
  std::string arm_hash;
  std::string scene_hash;
  std::string oracle;       // oracle parameter echo, one line
  std::uint64_t seed = 0;

  bool operator==(const GridProvenance&) const = default;
};

struct ReachabilityGrid {
  GridSpec6 spec;
  std::vector<std::uint8_t> labels;  // 1 = reachable
  GridProvenance provenance;

  std::size_t reachable_count() const;
};

struct OracleParams {
  IkParams ik;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Algorithm: enumerate the lattice, query the collision-free-IK oracle per
// pose, label the cell. Each cell derives its own seed from (seed, index),
// so evaluation order and thread count never change the labels.
ReachabilityGrid generate_reachability(const ArmModel& arm, const GridSpec6& spec,
                                       const Scene& scene, const OracleParams& params,
                                       GridProvenance provenance = {});

// Binary "RGRD" format: magic, version, axis records, length-prefixed
// provenance, bit-packed labels, trailing CRC-32. Little-endian throughout.
void save_grid(const ReachabilityGrid& grid, const std::string& path);
ReachabilityGrid load_grid(const std::string& path);

struct GridIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rg
