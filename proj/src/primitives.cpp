#include "reachgrasp/primitives.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

Solid Solid::sphere(const Eigen::Vector3d& c, double radius) {
  Solid s;
  s.kind = Kind::Sphere;
  s.pose = Pose6{c.x(), c.y(), c.z(), 0, 0, 0};
  s.r = radius;
  return s;
}

Solid Solid::box(const Pose6& pose, const Eigen::Vector3d& half_extents) {
  Solid s;
  s.kind = Kind::Box;
  s.pose = pose;
  s.half_extents = half_extents;
  return s;
}

Solid Solid::cylinder(const Pose6& pose, double radius, double half_height) {
  Solid s;
  s.kind = Kind::Cylinder;
  s.pose = pose;
  s.r = radius;
  s.hh = half_height;
  return s;
}

double Solid::bounding_radius() const {
  switch (kind) {
    case Kind::Sphere: return r;
    case Kind::Box: return half_extents.norm();
    case Kind::Cylinder: return std::sqrt(r * r + hh * hh);
  }
  return 0.0;
}

namespace {

// All local-frame helpers. Query points are transformed into the solid's
// frame, results transformed back by the caller.

ClosestPoint box_closest_local(const Eigen::Vector3d& he, const Eigen::Vector3d& p) {
  Eigen::Vector3d q = p.cwiseMax(-he).cwiseMin(he);
  ClosestPoint cp;
  cp.point = q;
  cp.distance = (p - q).norm();
  cp.inside = cp.distance == 0.0;
  return cp;
}

ClosestPoint cylinder_closest_local(double r, double hh, const Eigen::Vector3d& p) {
  const double rad = std::hypot(p.x(), p.y());
  ClosestPoint cp;
  if (rad <= r && std::abs(p.z()) <= hh) {
    cp.point = p;
    cp.distance = 0.0;
    cp.inside = true;
    return cp;
  }
  const double cr = std::min(rad, r);
  const double cz = std::clamp(p.z(), -hh, hh);
  Eigen::Vector3d q;
  if (rad > 1e-12) {
    q = {p.x() * cr / rad, p.y() * cr / rad, cz};
  } else {
    q = {0, 0, cz};
  }
  cp.point = q;
  cp.distance = (p - q).norm();
  cp.inside = false;
  return cp;
}

SurfacePoint box_surface_local(const Eigen::Vector3d& he, const Eigen::Vector3d& p) {
  SurfacePoint sp;
  const bool inside = (p.cwiseAbs().array() <= he.array()).all();
  if (!inside) {
    Eigen::Vector3d q = p.cwiseMax(-he).cwiseMin(he);
    sp.point = q;
    sp.signed_distance = (p - q).norm();
    Eigen::Vector3d n = p - q;
    sp.normal = n.norm() > 1e-12 ? n.normalized() : Eigen::Vector3d::UnitZ();
    return sp;
  }
  // Inside: push out through the nearest face.
  int axis = 0;
  double best = he.x() - std::abs(p.x());
  for (int i = 1; i < 3; ++i) {
    const double gap = he[i] - std::abs(p[i]);
    if (gap < best) { best = gap; axis = i; }
  }
  Eigen::Vector3d q = p;
  const double sgn = p[axis] >= 0 ? 1.0 : -1.0;
  q[axis] = sgn * he[axis];
  sp.point = q;
  sp.signed_distance = -best;
  sp.normal = sgn * Eigen::Vector3d::Unit(axis);
  return sp;
}

SurfacePoint cylinder_surface_local(double r, double hh, const Eigen::Vector3d& p) {
  SurfacePoint sp;
  const double rad = std::hypot(p.x(), p.y());
  const bool inside = rad <= r && std::abs(p.z()) <= hh;
  if (!inside) {
    ClosestPoint cp = cylinder_closest_local(r, hh, p);
    sp.point = cp.point;
    sp.signed_distance = cp.distance;
    Eigen::Vector3d n = p - cp.point;
    sp.normal = n.norm() > 1e-12 ? n.normalized() : Eigen::Vector3d::UnitZ();
    return sp;
  }
  const double gap_side = r - rad;
  const double gap_cap = hh - std::abs(p.z());
  if (gap_side < gap_cap) {
    Eigen::Vector3d radial =
        rad > 1e-12 ? Eigen::Vector3d(p.x() / rad, p.y() / rad, 0) : Eigen::Vector3d::UnitX();
    sp.point = Eigen::Vector3d(radial.x() * r, radial.y() * r, p.z());
    sp.normal = radial;
    sp.signed_distance = -gap_side;
  } else {
    const double sgn = p.z() >= 0 ? 1.0 : -1.0;
    sp.point = Eigen::Vector3d(p.x(), p.y(), sgn * hh);
    sp.normal = sgn * Eigen::Vector3d::UnitZ();
    sp.signed_distance = -gap_cap;
  }
  return sp;
}

}  // namespace

ClosestPoint closest_point(const Solid& s, const Eigen::Vector3d& p) {
  switch (s.kind) {
    case Solid::Kind::Sphere: {
      const Eigen::Vector3d c = s.pose.translation();
      const double d = (p - c).norm();
      ClosestPoint cp;
      if (d <= s.r) {
        cp.point = p;
        cp.distance = 0.0;
        cp.inside = true;
      } else {
        cp.point = c + (p - c) * (s.r / d);
        cp.distance = d - s.r;
        cp.inside = false;
      }
      return cp;
    }
    case Solid::Kind::Box: {
      const Eigen::Isometry3d t = s.pose.isometry();
      ClosestPoint cp = box_closest_local(s.half_extents, t.inverse() * p);
      cp.point = t * cp.point;
      return cp;
    }
    case Solid::Kind::Cylinder: {
      const Eigen::Isometry3d t = s.pose.isometry();
      ClosestPoint cp = cylinder_closest_local(s.r, s.hh, t.inverse() * p);
      cp.point = t * cp.point;
      return cp;
    }
  }
  return {};
}

double point_distance(const Solid& s, const Eigen::Vector3d& p) {
  return closest_point(s, p).distance;
}

SurfacePoint closest_surface_point(const Solid& s, const Eigen::Vector3d& p) {
  switch (s.kind) {
    case Solid::Kind::Sphere: {
      const Eigen::Vector3d c = s.pose.translation();
      Eigen::Vector3d n = p - c;
      const double d = n.norm();
      SurfacePoint sp;
      sp.normal = d > 1e-12 ? (n / d).eval() : Eigen::Vector3d::UnitZ();
      sp.point = c + sp.normal * s.r;
      sp.signed_distance = d - s.r;
      return sp;
    }
    case Solid::Kind::Box: {
      const Eigen::Isometry3d t = s.pose.isometry();
      SurfacePoint sp = box_surface_local(s.half_extents, t.inverse() * p);
      sp.point = t * sp.point;
      sp.normal = t.linear() * sp.normal;
      return sp;
    }
    case Solid::Kind::Cylinder: {
      const Eigen::Isometry3d t = s.pose.isometry();
      SurfacePoint sp = cylinder_surface_local(s.r, s.hh, t.inverse() * p);
      sp.point = t * sp.point;
      sp.normal = t.linear() * sp.normal;
      return sp;
    }
  }
  return {};
}

double segment_distance(const Solid& s, const Eigen::Vector3d& a,
                        const Eigen::Vector3d& b) {
  if (s.kind == Solid::Kind::Sphere) {
    const Eigen::Vector3d c = s.pose.translation();
    const Eigen::Vector3d ab = b - a;
    const double len2 = ab.squaredNorm();
    double t = len2 > 1e-18 ? std::clamp((c - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return std::max(0.0, (a + t * ab - c).norm() - s.r);
  }
  // Point-to-convex-solid distance is convex along the segment; golden
  // section search finds the global minimum.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  auto f = [&](double t) { return point_distance(s, a + t * (b - a)); };
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80; ++i) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min({f(lo), f(hi), f1, f2});
}

double segment_segment_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& q1,
                                const Eigen::Vector3d& p2, const Eigen::Vector3d& q2) {
  // Ericson, Real-Time Collision Detection, closest-point-of-two-segments.
  const Eigen::Vector3d d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  const double eps = 1e-14;
  if (a <= eps && e <= eps) return r.norm();
  if (a <= eps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= eps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > eps ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return (p1 + s * d1 - (p2 + t * d2)).norm();
}

namespace {

std::optional<double> slab_ray(double o, double d, double lo, double hi,
                               double& tmin, double& tmax) {
  if (std::abs(d) < 1e-14) {
    if (o < lo || o > hi) return std::nullopt;
    return 0.0;  // value unused; signals "still feasible"
  }
  double t1 = (lo - o) / d, t2 = (hi - o) / d;
  if (t1 > t2) std::swap(t1, t2);
  tmin = std::max(tmin, t1);
  tmax = std::min(tmax, t2);
  if (tmin > tmax) return std::nullopt;
  return 0.0;
}

}  // namespace

std::optional<double> ray_hit(const Solid& s, const Eigen::Vector3d& o,
                              const Eigen::Vector3d& d) {
  switch (s.kind) {
    case Solid::Kind::Sphere: {
      const Eigen::Vector3d m = o - s.pose.translation();
      const double b = m.dot(d);
      const double c = m.squaredNorm() - s.r * s.r;
      if (c <= 0.0) return 0.0;
      const double disc = b * b - c;
      if (disc < 0.0) return std::nullopt;
      const double t = -b - std::sqrt(disc);
      if (t < 0.0) return std::nullopt;
      return t;
    }
    case Solid::Kind::Box: {
      const Eigen::Isometry3d inv = s.pose.isometry().inverse();
      const Eigen::Vector3d lo_ = inv * o;
      const Eigen::Vector3d ld = inv.linear() * d;
      double tmin = 0.0, tmax = std::numeric_limits<double>::infinity();
      for (int i = 0; i < 3; ++i) {
        if (!slab_ray(lo_[i], ld[i], -s.half_extents[i], s.half_extents[i], tmin, tmax))
          return std::nullopt;
      }
      return tmin;
    }
    case Solid::Kind::Cylinder: {
      const Eigen::Isometry3d inv = s.pose.isometry().inverse();
      const Eigen::Vector3d p = inv * o;
      const Eigen::Vector3d v = inv.linear() * d;
      // Intersect infinite cylinder and z-slab, then combine intervals.
      double tmin = 0.0, tmax = std::numeric_limits<double>::infinity();
      if (!slab_ray(p.z(), v.z(), -s.hh, s.hh, tmin, tmax)) return std::nullopt;
      const double a = v.x() * v.x() + v.y() * v.y();
      const double c0 = p.x() * p.x() + p.y() * p.y() - s.r * s.r;
      if (a < 1e-14) {
        if (c0 > 0.0) return std::nullopt;
      } else {
        const double b = p.x() * v.x() + p.y() * v.y();
        const double disc = b * b - a * c0;
        if (disc < 0.0) return std::nullopt;
        const double sq = std::sqrt(disc);
        const double t1 = (-b - sq) / a, t2 = (-b + sq) / a;
        tmin = std::max(tmin, t1);
        tmax = std::min(tmax, t2);
        if (tmin > tmax) return std::nullopt;
      }
      return tmin;
    }
  }
  return std::nullopt;
}

}  // namespace rg
