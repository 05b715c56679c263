#include "reachgrasp/grid.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "reachgrasp/digest.hpp"

namespace rg {

int AxisSpec::count() const {
  if (step <= 0.0) throw std::invalid_argument("axis step must be > 0");
  if (min > max) throw std::invalid_argument("axis min must not exceed max");
  const double span = max - min;
  if (cyclic) {
    const int n = static_cast<int>(std::llround(span / step));
    return std::max(n, 1);
  }
  // Epsilon guards against span/step landing just below an integer.
  return static_cast<int>(std::floor(span / step + 1e-9)) + 1;
}

void GridSpec6::validate() const {
  for (int a = 0; a < 6; ++a) {
    const AxisSpec& ax = axes[static_cast<size_t>(a)];
    (void)ax.count();  // throws on bad step/range
    if (ax.cyclic && std::abs((ax.max - ax.min) - 2.0 * M_PI) > 1e-9)
      throw std::invalid_argument("cyclic axis must span exactly 2*pi");
    if (a < 3 && ax.cyclic)
      throw std::invalid_argument("translational axes cannot be cyclic");
  }
}

std::array<int, 6> GridSpec6::counts() const {
  std::array<int, 6> c{};
  for (int a = 0; a < 6; ++a) c[static_cast<size_t>(a)] = axes[static_cast<size_t>(a)].count();
  return c;
}

std::size_t GridSpec6::cell_count() const {
  std::size_t n = 1;
  for (int c : counts()) n *= static_cast<std::size_t>(c);
  return n;
}

std::size_t GridSpec6::index_of(const std::array<int, 6>& idx) const {
  const auto c = counts();
  std::size_t linear = 0;
  for (int a = 0; a < 6; ++a) {
    linear = linear * static_cast<std::size_t>(c[static_cast<size_t>(a)]) +
             static_cast<std::size_t>(idx[static_cast<size_t>(a)]);
  }
  return linear;
}

std::array<int, 6> GridSpec6::multi_index(std::size_t linear) const {
  const auto c = counts();
  std::array<int, 6> idx{};
  for (int a = 5; a >= 0; --a) {
    idx[static_cast<size_t>(a)] =
        static_cast<int>(linear % static_cast<std::size_t>(c[static_cast<size_t>(a)]));
    linear /= static_cast<std::size_t>(c[static_cast<size_t>(a)]);
  }
  return idx;
}

Pose6 GridSpec6::pose_at(const std::array<int, 6>& idx) const {
  std::array<double, 6> v{};
  for (int a = 0; a < 6; ++a) {
    const AxisSpec& ax = axes[static_cast<size_t>(a)];
    v[static_cast<size_t>(a)] = ax.min + idx[static_cast<size_t>(a)] * ax.step;
  }
  Pose6 p{v[0], v[1], v[2], v[3], v[4], v[5]};
  return p.normalized();
}

Pose6 GridSpec6::pose_at(std::size_t linear) const { return pose_at(multi_index(linear)); }

std::vector<Pose6> uniform_sample_workspace(const GridSpec6& spec) {
  spec.validate();
  const std::size_t n = spec.cell_count();
  std::vector<Pose6> poses;
  poses.reserve(n);
  for (std::size_t i = 0; i < n; ++i) poses.push_back(spec.pose_at(i));
  return poses;
}

std::size_t ReachabilityGrid::reachable_count() const {
  std::size_t n = 0;
  for (std::uint8_t v : labels) n += v ? 1 : 0;
  return n;
}

ReachabilityGrid generate_reachability(const ArmModel& arm, const GridSpec6& spec,
                                       const Scene& scene, const OracleParams& params,
                                       GridProvenance provenance) {
  spec.validate();
  const std::size_t n = spec.cell_count();
  ReachabilityGrid grid;
  grid.spec = spec;
  grid.labels.assign(n, 0);
  provenance.seed = params.seed;
  grid.provenance = std::move(provenance);

  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      IkParams ik = params.ik;
      ik.seed = mix64(params.seed ^ mix64(i));
      grid.labels[i] = has_collision_free_ik(arm, spec.pose_at(i), scene, ik) ? 1 : 0;
    }
  };

  const int threads = std::max(1, params.threads);
  if (threads == 1 || n < 1024) {
    eval_range(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + static_cast<std::size_t>(threads) - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = static_cast<std::size_t>(t) * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return grid;
}

namespace {

constexpr char kMagic[4] = {'R', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::string& out, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T take(const std::string& in, std::size_t& off) {
  if (off + sizeof(T) > in.size()) throw GridIoError("truncated grid file");
  T v;
  std::memcpy(&v, in.data() + off, sizeof(T));
  off += sizeof(T);
  return v;
}

std::string encode_provenance(const GridProvenance& p) {
  std::ostringstream ss;
  ss << p.arm_hash << '\n' << p.scene_hash << '\n' << p.oracle << '\n' << p.seed;
  return ss.str();
}

GridProvenance decode_provenance(const std::string& blob) {
  GridProvenance p;
  std::istringstream ss(blob);
  std::getline(ss, p.arm_hash);
  std::getline(ss, p.scene_hash);
  std::getline(ss, p.oracle);
  ss >> p.seed;
  return p;
}

}  // namespace

void save_grid(const ReachabilityGrid& grid, const std::string& path) {
  std::string out;
  out.append(kMagic, 4);
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, 6);
  for (const AxisSpec& ax : grid.spec.axes) {
    put<double>(out, ax.min);
    put<double>(out, ax.step);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(ax.count()));
    put<std::uint8_t>(out, ax.cyclic ? 1 : 0);
  }
  const std::string prov = encode_provenance(grid.provenance);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(prov.size()));
  out += prov;
  // Bit-packed labels, row-major.
  const std::size_t n = grid.labels.size();
  std::string payload((n + 7) / 8, '\0');
  for (std::size_t i = 0; i < n; ++i)
    if (grid.labels[i]) payload[i / 8] |= static_cast<char>(1 << (i % 8));
  out += payload;
  put<std::uint32_t>(out, crc32(out.data(), out.size()));

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw GridIoError("cannot open for writing: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw GridIoError("write failed: " + path);
}

ReachabilityGrid load_grid(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GridIoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  const std::string in = ss.str();
  if (in.size() < 12) throw GridIoError("truncated grid file");
  if (std::memcmp(in.data(), kMagic, 4) != 0) throw GridIoError("bad magic (expected RGRD)");
  std::uint32_t stored_crc;
  std::memcpy(&stored_crc, in.data() + in.size() - 4, 4);
  if (crc32(in.data(), in.size() - 4) != stored_crc)
    throw GridIoError("checksum mismatch in " + path);

  std::size_t off = 4;
  const auto version = take<std::uint32_t>(in, off);
  if (version != kVersion) throw GridIoError("unsupported grid format version");
  const auto axis_count = take<std::uint32_t>(in, off);
  if (axis_count != 6) throw GridIoError("unexpected axis count");

  ReachabilityGrid grid;
  std::array<std::uint32_t, 6> counts{};
  for (int a = 0; a < 6; ++a) {
    AxisSpec& ax = grid.spec.axes[static_cast<size_t>(a)];
    ax.min = take<double>(in, off);
    ax.step = take<double>(in, off);
    counts[static_cast<size_t>(a)] = take<std::uint32_t>(in, off);
    ax.cyclic = take<std::uint8_t>(in, off) != 0;
    // Reconstruct max from count so count() reproduces the stored value.
    if (ax.cyclic) {
      ax.max = ax.min + 2.0 * M_PI;
    } else {
      ax.max = ax.min + (counts[static_cast<size_t>(a)] - 1) * ax.step;
    }
  }
  const auto prov_len = take<std::uint32_t>(in, off);
  if (off + prov_len > in.size()) throw GridIoError("truncated provenance block");
  grid.provenance = decode_provenance(in.substr(off, prov_len));
  off += prov_len;

  for (int a = 0; a < 6; ++a) {
    if (static_cast<std::uint32_t>(grid.spec.axes[static_cast<size_t>(a)].count()) !=
        counts[static_cast<size_t>(a)])
      throw GridIoError("axis count inconsistent with min/step");
  }
  const std::size_t n = grid.spec.cell_count();
  const std::size_t payload_len = (n + 7) / 8;
  if (off + payload_len + 4 != in.size()) throw GridIoError("payload size mismatch");
  grid.labels.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    grid.labels[i] = (in[off + i / 8] >> (i % 8)) & 1;
  return grid;
}

}  // namespace rg
