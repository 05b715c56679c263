#pragma once

#include <optional>
#include <string>
#include <variant>

#include "reachgrasp/pose.hpp"

namespace rg {

// Convex solid primitives used for obstacles, grasp objects and link
// geometry. Boxes and cylinders carry their own pose; spheres and capsules
// are given directly in the frame they are used in.

struct SphereShape {
  Eigen::Vector3d center{0, 0, 0};
  double radius = 0.0;
};

struct CapsuleShape {
  Eigen::Vector3d a{0, 0, 0};
  Eigen::Vector3d b{0, 0, 0};
  double radius = 0.0;
};

struct BoxShape {
  Eigen::Vector3d half_extents{0, 0, 0};  // local frame, centered at origin
};

struct CylinderShape {
  double radius = 0.0;
  double half_height = 0.0;  // axis along local z
};

// A posed convex solid. For spheres the pose translation is the center.
struct Solid {
  enum class Kind { Sphere, Box, Cylinder };
  Kind kind = Kind::Sphere;
  Pose6 pose;
  // sphere: r = radius; box: hx,hy,hz; cylinder: r = radius, hh = half height
  double r = 0.0, hh = 0.0;
  Eigen::Vector3d half_extents{0, 0, 0};

  static Solid sphere(const Eigen::Vector3d& c, double radius);
  static Solid box(const Pose6& pose, const Eigen::Vector3d& half_extents);
  static Solid cylinder(const Pose6& pose, double radius, double half_height);

  // Radius of the bounding sphere centered at the solid's origin.
  double bounding_radius() const;
};

// Closest point on the solid's surface-or-interior to p (p itself if inside),
// together with the signed fact of containment.
struct ClosestPoint {
  Eigen::Vector3d point;
  double distance = 0.0;  // 0 when p is inside the solid
  bool inside = false;
};

ClosestPoint closest_point(const Solid& s, const Eigen::Vector3d& p);

// Euclidean distance from point to solid; 0 inside.
double point_distance(const Solid& s, const Eigen::Vector3d& p);

// Closest point on the *surface* of the solid (meaningful also for interior
// query points), with the outward surface normal at that point.
struct SurfacePoint {
  Eigen::Vector3d point;
  Eigen::Vector3d normal;       // unit outward
  double signed_distance = 0.0; // negative inside
};

SurfacePoint closest_surface_point(const Solid& s, const Eigen::Vector3d& p);

// Minimum distance between the segment [a,b] and the solid; 0 on overlap.
// Exact for spheres; for boxes and cylinders the convex point-distance is
// minimized over the segment parameter by golden-section search.
double segment_distance(const Solid& s, const Eigen::Vector3d& a,
                        const Eigen::Vector3d& b);

// Minimum distance between two segments.
double segment_segment_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& q1,
                                const Eigen::Vector3d& p2, const Eigen::Vector3d& q2);

// First intersection of the ray o + t*d (t >= 0, |d| = 1) with the solid.
// Returns the entry parameter t, or nothing on a miss. A ray starting inside
// reports t = 0.
std::optional<double> ray_hit(const Solid& s, const Eigen::Vector3d& o,
                              const Eigen::Vector3d& d);

}  // namespace rg
