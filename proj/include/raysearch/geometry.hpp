#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace raysearch {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

enum class Side { Left, Right };

/// A goal ray in the upper half-plane that points toward the origin.
///
/// The supporting line makes angle `beta` in (0, pi/2] with the baseline
/// and passes through `anchor`; the source of the ray is the intersection
/// of that line with the baseline y = 0.  Right-side rays have negative
/// slope, left-side rays the mirror image.
struct RaySpec {
  Side side = Side::Right;
  double beta = 0.0;
  Point anchor;

  double side_sign() const { return side == Side::Right ? 1.0 : -1.0; }

  /// Unit normal of the supporting line pointing away from the origin side.
  Point normal() const { return {side_sign() * std::sin(beta), std::cos(beta)}; }

  /// Unit direction along the ray from its source upward.
  Point direction() const { return {-side_sign() * std::cos(beta), std::sin(beta)}; }

  /// Signed distance of p to the supporting line; negative on the origin side.
  double signed_offset(Point p) const { return dot(normal(), p - anchor); }

  /// Source of the ray on the baseline.
  Point source() const {
    return {anchor.x + side_sign() * anchor.y * std::cos(beta) / std::sin(beta), 0.0};
  }

  void validate() const;
};

/// Length of the shortest segment from the origin to the supporting line of
/// `ray`.  The foot of that segment lies on the ray itself because the ray
/// points toward the origin.
double perp_distance_to_ray(const RaySpec& ray);

/// Foot of the perpendicular from the origin onto the supporting line.
Point perp_foot_from_origin(const RaySpec& ray);

/// Polyline with prefix arc lengths.  Vertices stay in the closed upper
/// half-plane and never lose height.
struct SearchPath {
  std::vector<Point> vertices;
  std::vector<double> cum_len;

  static SearchPath from_vertices(std::vector<Point> vs);

  void append(Point p);
  std::size_t size() const { return vertices.size(); }
  double total_length() const { return cum_len.empty() ? 0.0 : cum_len.back(); }

  /// Point at arc-length position s (clamped to [0, total]).
  Point at_arc(double s) const;

  void validate() const;
};

enum class HitKind { Crossing, Tangential };

struct Hit {
  Point point;
  double arc_length = 0.0;
  HitKind kind = HitKind::Crossing;
};

/// Earliest intersection of the path with the ray, ordered by arc length.
///
/// With `skip_tangential`, contacts where the path touches the supporting
/// line without changing sides are ignored; a collinear stretch that the
/// path enters from one side and leaves to the other counts as a crossing
/// at the *end* of the stretch.  This realizes the "slightly missed" worst
/// case: a ray tangent at a turning point is only detected on the return.
std::optional<Hit> first_hit(const SearchPath& path, const RaySpec& ray,
                             bool skip_tangential);

Point mirror(Point p);
RaySpec mirror(const RaySpec& ray);
SearchPath mirror(const SearchPath& path);

}  // namespace raysearch
