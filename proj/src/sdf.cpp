#include "reachgrasp/sdf.hpp"

#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include "reachgrasp/digest.hpp"

namespace rg {

void MetricParams::validate() const {
  if (res_lin_cm <= 0.0 || res_rot_rad <= 0.0 || ratio <= 0.0)
    throw std::invalid_argument("metric parameters must be strictly positive");
}

double metric_distance(const Pose6& a, const Pose6& b, const MetricParams& m) {
  const double dx = (a.x - b.x) * 100.0 / m.res_lin_cm;
  const double dy = (a.y - b.y) * 100.0 / m.res_lin_cm;
  const double dz = (a.z - b.z) * 100.0 / m.res_lin_cm;
  const double dr = angle_diff(a.roll, b.roll) / m.res_rot_rad;
  const double dp = angle_diff(a.pitch, b.pitch) / m.res_rot_rad;
  const double dyaw = angle_diff(a.yaw, b.yaw) / m.res_rot_rad;
  return std::sqrt(dx * dx + dy * dy + dz * dz +
                   m.ratio * (dr * dr + dp * dp + dyaw * dyaw));
}

double SdfGrid::axis_step_length(int axis) const {
  const AxisSpec& ax = spec.axes[static_cast<size_t>(axis)];
  if (axis < 3) return ax.step * 100.0 / metric.res_lin_cm;
  return std::sqrt(metric.ratio) * ax.step / metric.res_rot_rad;
}

double SdfGrid::box_diagonal_length() const {
  double sum = 0.0;
  for (int a = 0; a < 6; ++a) {
    const AxisSpec& ax = spec.axes[static_cast<size_t>(a)];
    double extent = ax.max - ax.min;
    double term;
    if (a < 3) {
      term = extent * 100.0 / metric.res_lin_cm;
    } else {
      extent = std::min(extent, M_PI);  // wrap caps angular separation
      term = std::sqrt(metric.ratio) * extent / metric.res_rot_rad;
    }
    sum += term * term;
  }
  return std::sqrt(sum);
}

namespace {

struct Stencil {
  std::vector<std::array<int, 6>> offsets;
  std::vector<double> weights;
};

Stencil build_stencil(const SdfGrid& sdf, bool diagonal) {
  const auto counts = sdf.spec.counts();
  Stencil st;
  if (!diagonal) {
    for (int a = 0; a < 6; ++a) {
      if (counts[static_cast<size_t>(a)] < 2) continue;
      for (int s : {-1, 1}) {
        std::array<int, 6> off{};
        off[static_cast<size_t>(a)] = s;
        st.offsets.push_back(off);
        st.weights.push_back(sdf.axis_step_length(a));
      }
    }
    return st;
  }
  std::array<int, 6> off{};
  // Enumerate {-1,0,1}^6 restricted to active axes.
  std::function<void(int)> rec = [&](int a) {
    if (a == 6) {
      bool any = false;
      double w2 = 0.0;
      for (int i = 0; i < 6; ++i) {
        if (off[static_cast<size_t>(i)] != 0) {
          any = true;
          const double l = sdf.axis_step_length(i);
          w2 += l * l;
        }
      }
      if (any) {
        st.offsets.push_back(off);
        st.weights.push_back(std::sqrt(w2));
      }
      return;
    }
    const bool active = counts[static_cast<size_t>(a)] >= 2;
    for (int s = active ? -1 : 0; s <= (active ? 1 : 0); ++s) {
      off[static_cast<size_t>(a)] = s;
      rec(a + 1);
    }
  };
  rec(0);
  return st;
}

// Neighbor linear index with cyclic wrap, or npos when off-grid.
std::size_t neighbor_index(const GridSpec6& spec, const std::array<int, 6>& counts,
                           std::array<int, 6> idx, const std::array<int, 6>& off) {
  for (int a = 0; a < 6; ++a) {
    int v = idx[static_cast<size_t>(a)] + off[static_cast<size_t>(a)];
    const int c = counts[static_cast<size_t>(a)];
    if (spec.axes[static_cast<size_t>(a)].cyclic) {
      v = ((v % c) + c) % c;
    } else if (v < 0 || v >= c) {
      return std::numeric_limits<std::size_t>::max();
    }
    idx[static_cast<size_t>(a)] = v;
  }
  return spec.index_of(idx);
}

}  // namespace

SdfGrid compute_sdf(const ReachabilityGrid& grid, const MetricParams& m,
                    const SdfOptions& opts) {
  m.validate();
  grid.spec.validate();
  const std::size_t n = grid.labels.size();
  const std::size_t reach = grid.reachable_count();
  if (reach == 0 || reach == n)
    throw DegenerateGridError(
        "reachability grid is degenerate: all cells share one label, no "
        "boundary exists");

  SdfGrid sdf;
  sdf.spec = grid.spec;
  sdf.metric = m;
  sdf.provenance = grid.provenance;
  sdf.values.assign(n, 0.0);

  bool diagonal;
  const Stencil faces = build_stencil(sdf, false);
  switch (opts.neighborhood) {
    case Neighborhood::Faces: diagonal = false; break;
    case Neighborhood::Diagonal: diagonal = true; break;
    case Neighborhood::Auto: {
      std::size_t full = 1;
      for (int c : grid.spec.counts())
        if (c >= 2) full *= 3;
      diagonal = n * (full - 1) <= 20'000'000;
      break;
    }
  }
  const Stencil st = diagonal ? build_stencil(sdf, true) : faces;

  const auto counts = grid.spec.counts();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  // Seed the front: cells facing an opposite label start at half the
  // crossing edge's length.
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = grid.spec.multi_index(i);
    for (std::size_t k = 0; k < faces.offsets.size(); ++k) {
      const std::size_t j = neighbor_index(grid.spec, counts, idx, faces.offsets[k]);
      if (j == std::numeric_limits<std::size_t>::max()) continue;
      if (grid.labels[j] != grid.labels[i])
        dist[i] = std::min(dist[i], faces.weights[k] / 2.0);
    }
    if (std::isfinite(dist[i])) heap.emplace(dist[i], i);
  }

  while (!heap.empty()) {
    const auto [d, i] = heap.top();
    heap.pop();
    if (d > dist[i]) continue;
    const auto idx = grid.spec.multi_index(i);
    for (std::size_t k = 0; k < st.offsets.size(); ++k) {
      const std::size_t j = neighbor_index(grid.spec, counts, idx, st.offsets[k]);
      if (j == std::numeric_limits<std::size_t>::max()) continue;
      const double nd = d + st.weights[k];
      if (nd < dist[j]) {
        dist[j] = nd;
        heap.emplace(nd, j);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    sdf.values[i] = grid.labels[i] ? dist[i] : -dist[i];
  return sdf;
}

SdfGrid brute_force_sdf(const ReachabilityGrid& grid, const MetricParams& m) {
  m.validate();
  const std::size_t n = grid.labels.size();
  const std::size_t reach = grid.reachable_count();
  if (reach == 0 || reach == n)
    throw DegenerateGridError(
        "reachability grid is degenerate: all cells share one label, no "
        "boundary exists");

  std::vector<Pose6> poses;
  poses.reserve(n);
  for (std::size_t i = 0; i < n; ++i) poses.push_back(grid.spec.pose_at(i));

  SdfGrid sdf;
  sdf.spec = grid.spec;
  sdf.metric = m;
  sdf.provenance = grid.provenance;
  sdf.values.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (grid.labels[j] == grid.labels[i]) continue;
      best = std::min(best, metric_distance(poses[i], poses[j], m));
    }
    sdf.values[i] = grid.labels[i] ? best : -best;
  }
  return sdf;
}

double query_sdf(const SdfGrid& sdf, const Pose6& p) {
  const auto counts = sdf.spec.counts();
  const Pose6 q = p.normalized();
  const std::array<double, 6> coord{q.x, q.y, q.z, q.roll, q.pitch, q.yaw};

  std::array<int, 6> i0{}, i1{};
  std::array<double, 6> frac{};
  for (int a = 0; a < 6; ++a) {
    const AxisSpec& ax = sdf.spec.axes[static_cast<size_t>(a)];
    const int c = counts[static_cast<size_t>(a)];
    double u;
    if (ax.cyclic) {
      // Map into [0, c) and interpolate across the seam.
      u = (coord[static_cast<size_t>(a)] - ax.min) / ax.step;
      u = std::fmod(u, static_cast<double>(c));
      if (u < 0) u += c;
      const int lo = static_cast<int>(std::floor(u)) % c;
      i0[static_cast<size_t>(a)] = lo;
      i1[static_cast<size_t>(a)] = (lo + 1) % c;
      frac[static_cast<size_t>(a)] = u - std::floor(u);
    } else {
      double v = coord[static_cast<size_t>(a)];
      if (a >= 3) v = wrap_angle(v);
      u = (v - ax.min) / ax.step;
      const double maxu = static_cast<double>(c - 1);
      if (u < -1e-9 || u > maxu + 1e-9)
        throw OutOfDomainError("query pose outside the grid box on axis " +
                               std::to_string(a));
      u = std::clamp(u, 0.0, maxu);
      int lo = std::min(static_cast<int>(std::floor(u)), std::max(c - 2, 0));
      i0[static_cast<size_t>(a)] = lo;
      i1[static_cast<size_t>(a)] = std::min(lo + 1, c - 1);
      frac[static_cast<size_t>(a)] = c > 1 ? u - lo : 0.0;
    }
  }

  double result = 0.0;
  for (int corner = 0; corner < 64; ++corner) {
    double w = 1.0;
    std::array<int, 6> idx{};
    for (int a = 0; a < 6; ++a) {
      const bool hi = (corner >> a) & 1;
      w *= hi ? frac[static_cast<size_t>(a)] : 1.0 - frac[static_cast<size_t>(a)];
      idx[static_cast<size_t>(a)] = hi ? i1[static_cast<size_t>(a)] : i0[static_cast<size_t>(a)];
    }
    if (w == 0.0) continue;
    result += w * sdf.values[sdf.spec.index_of(idx)];
  }
  return result;
}

SdfQuality evaluate_sdf_quality(const SdfGrid& sdf, const ArmModel& arm,
                                const Scene& scene, std::size_t n,
                                const IkParams& oracle, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SdfQuality q;
  q.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    Pose6 p;
    std::array<double*, 6> f{&p.x, &p.y, &p.z, &p.roll, &p.pitch, &p.yaw};
    for (int a = 0; a < 6; ++a) {
      const AxisSpec& ax = sdf.spec.axes[static_cast<size_t>(a)];
      const double span = ax.cyclic ? ax.max - ax.min : (ax.count() - 1) * ax.step;
      *f[static_cast<size_t>(a)] = ax.min + unit(rng) * span;
    }
    const bool predicted = query_sdf(sdf, p) >= 0.0;
    IkParams ik = oracle;
    ik.seed = mix64(seed ^ mix64(i));
    const bool truth = has_collision_free_ik(arm, p, scene, ik);
    if (predicted && truth) ++q.tp;
    else if (predicted && !truth) ++q.fp;
    else if (!predicted && !truth) ++q.tn;
    else ++q.fn;
  }
  q.accuracy = static_cast<double>(q.tp + q.tn) / static_cast<double>(n);
  q.precision = q.tp + q.fp > 0 ? static_cast<double>(q.tp) / static_cast<double>(q.tp + q.fp) : 0.0;
  q.recall = q.tp + q.fn > 0 ? static_cast<double>(q.tp) / static_cast<double>(q.tp + q.fn) : 0.0;
  return q;
}

namespace {

constexpr char kSdfMagic[4] = {'S', 'D', 'F', '6'};
constexpr std::uint32_t kSdfVersion = 1;

template <typename T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T take(const std::string& in, std::size_t& off) {
  if (off + sizeof(T) > in.size()) throw GridIoError("truncated sdf file");
  T v;
  std::memcpy(&v, in.data() + off, sizeof(T));
  off += sizeof(T);
  return v;
}

}  // namespace

void save_sdf(const SdfGrid& sdf, const std::string& path) {
  std::string out;
  out.append(kSdfMagic, 4);
  put<std::uint32_t>(out, kSdfVersion);
  put<std::uint32_t>(out, 6);
  for (const AxisSpec& ax : sdf.spec.axes) {
    put<double>(out, ax.min);
    put<double>(out, ax.step);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(ax.count()));
    put<std::uint8_t>(out, ax.cyclic ? 1 : 0);
  }
  put<double>(out, sdf.metric.res_lin_cm);
  put<double>(out, sdf.metric.res_rot_rad);
  put<double>(out, sdf.metric.ratio);
  std::ostringstream prov;
  prov << sdf.provenance.arm_hash << '\n' << sdf.provenance.scene_hash << '\n'
       << sdf.provenance.oracle << '\n' << sdf.provenance.seed;
  const std::string pb = prov.str();
  put<std::uint32_t>(out, static_cast<std::uint32_t>(pb.size()));
  out += pb;
  for (double v : sdf.values) put<float>(out, static_cast<float>(v));
  put<std::uint32_t>(out, crc32(out.data(), out.size()));

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw GridIoError("cannot open for writing: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw GridIoError("write failed: " + path);
}

SdfGrid load_sdf(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GridIoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  const std::string in = ss.str();
  if (in.size() < 12) throw GridIoError("truncated sdf file");
  if (std::memcmp(in.data(), kSdfMagic, 4) != 0)
    throw GridIoError("bad magic (expected SDF6)");
  std::uint32_t stored_crc;
  std::memcpy(&stored_crc, in.data() + in.size() - 4, 4);
  if (crc32(in.data(), in.size() - 4) != stored_crc)
    throw GridIoError("checksum mismatch in " + path);

  std::size_t off = 4;
  if (take<std::uint32_t>(in, off) != kSdfVersion)
    throw GridIoError("unsupported sdf format version");
  if (take<std::uint32_t>(in, off) != 6) throw GridIoError("unexpected axis count");

  SdfGrid sdf;
  std::array<std::uint32_t, 6> counts{};
  for (int a = 0; a < 6; ++a) {
    AxisSpec& ax = sdf.spec.axes[static_cast<size_t>(a)];
    ax.min = take<double>(in, off);
    ax.step = take<double>(in, off);
    counts[static_cast<size_t>(a)] = take<std::uint32_t>(in, off);
    ax.cyclic = take<std::uint8_t>(in, off) != 0;
    ax.max = ax.cyclic ? ax.min + 2.0 * M_PI
                       : ax.min + (counts[static_cast<size_t>(a)] - 1) * ax.step;
  }
  sdf.metric.res_lin_cm = take<double>(in, off);
  sdf.metric.res_rot_rad = take<double>(in, off);
  sdf.metric.ratio = take<double>(in, off);
  const auto prov_len = take<std::uint32_t>(in, off);
  if (off + prov_len > in.size()) throw GridIoError("truncated provenance block");
  {
    std::istringstream ps(in.substr(off, prov_len));
    std::getline(ps, sdf.provenance.arm_hash);
    std::getline(ps, sdf.provenance.scene_hash);
    std::getline(ps, sdf.provenance.oracle);
    ps >> sdf.provenance.seed;
  }
  off += prov_len;
  const std::size_t n = sdf.spec.cell_count();
  if (off + n * 4 + 4 != in.size()) throw GridIoError("payload size mismatch");
  sdf.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) sdf.values[i] = take<float>(in, off);
  return sdf;
}

}  // namespace rg
