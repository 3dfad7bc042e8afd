#include "raysearch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace raysearch {

namespace {
// Threshold for "on the supporting line" when classifying hits; scales
// with the local coordinate magnitude so collinear legs classify as on the
// line at any distance from the start.
constexpr double kOnLineTol = 1e-12;

int sign_of(double v, double scale) {
  const double tol = kOnLineTol * scale;
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}
}  // namespace

void RaySpec::validate() const {
  if (!std::isfinite(beta) || !std::isfinite(anchor.x) || !std::isfinite(anchor.y)) {
    throw std::invalid_argument("ray: non-finite parameters");
  }
  if (!(beta > 0.0) || beta > std::numbers::pi / 2 + 1e-12) {
    throw std::invalid_argument("ray: beta must lie in (0, pi/2]");
  }
  // Points-toward-origin: the perpendicular foot from the origin stays in
  // the closed upper half-plane, equivalently the origin is on the non-
  // positive side of the supporting line.
  if (signed_offset({0.0, 0.0}) > 1e-9 * (1.0 + std::abs(anchor.x) + std::abs(anchor.y))) {
    throw std::invalid_argument("ray: does not point toward the origin");
  }
}

double perp_distance_to_ray(const RaySpec& ray) {
  ray.validate();
  return -ray.signed_offset({0.0, 0.0});
}

Point perp_foot_from_origin(const RaySpec& ray) {
  const double d = perp_distance_to_ray(ray);
  return d * ray.normal();
}

SearchPath SearchPath::from_vertices(std::vector<Point> vs) {
  SearchPath p;
  p.vertices = std::move(vs);
  p.cum_len.resize(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    p.cum_len[i] = i == 0 ? 0.0
                          : p.cum_len[i - 1] + distance(p.vertices[i - 1], p.vertices[i]);
  }
  p.validate();
  return p;
}

void SearchPath::append(Point p) {
  const double d = vertices.empty() ? 0.0 : distance(vertices.back(), p);
  if (!vertices.empty() && d == 0.0) {
    throw std::invalid_argument("path: consecutive vertices must be distinct");
  }
  cum_len.push_back(vertices.empty() ? 0.0 : cum_len.back() + d);
  vertices.push_back(p);
}

Point SearchPath::at_arc(double s) const {
  if (vertices.empty()) throw std::invalid_argument("path: empty");
  if (s <= 0.0) return vertices.front();
  if (s >= total_length()) return vertices.back();
  const auto it = std::upper_bound(cum_len.begin(), cum_len.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - cum_len.begin());
  const double seg = cum_len[i] - cum_len[i - 1];
  const double t = (s - cum_len[i - 1]) / seg;
  return vertices[i - 1] + t * (vertices[i] - vertices[i - 1]);
}

void SearchPath::validate() const {
  if (vertices.size() != cum_len.size()) {
    throw std::invalid_argument("path: size mismatch");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& v = vertices[i];
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw std::invalid_argument("path: non-finite vertex");
    }
    if (v.y < -1e-9) {
      throw std::invalid_argument("path: vertex below the baseline");
    }
    if (i > 0) {
      if (!(cum_len[i] > cum_len[i - 1])) {
        throw std::invalid_argument("path: arc lengths must strictly increase");
      }
      const double scale = 1.0 + std::abs(vertices[i - 1].y) + std::abs(v.y);
      if (v.y < vertices[i - 1].y - 1e-9 * scale) {
        throw std::invalid_argument("path: height must not decrease");
      }
    }
  }
}

std::optional<Hit> first_hit(const SearchPath& path, const RaySpec& ray,
                             bool skip_tangential) {
  ray.validate();
  const std::size_t n = path.vertices.size();
  if (n == 0) throw std::invalid_argument("first_hit: empty path");
  if (n == 1) return std::nullopt;

  const double anchor_scale = 1.0 + std::abs(ray.anchor.x) + std::abs(ray.anchor.y);
  std::vector<double> f(n);
  std::vector<double> scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = ray.signed_offset(path.vertices[i]);
    scale[i] = anchor_scale + std::abs(path.vertices[i].x) + std::abs(path.vertices[i].y);
  }

  std::size_t i = 0;
  while (i + 1 < n) {
    const int sa = sign_of(f[i], scale[i]);
    const int sb = sign_of(f[i + 1], scale[i + 1]);
    if (sa != 0 && sb != 0) {
      if (sa != sb) {
        const double t = f[i] / (f[i] - f[i + 1]);
        const Point p = path.vertices[i] + t * (path.vertices[i + 1] - path.vertices[i]);
        const double arc =
            path.cum_len[i] + t * (path.cum_len[i + 1] - path.cum_len[i]);
        return Hit{p, arc, HitKind::Crossing};
      }
      ++i;
      continue;
    }
    // Zero stretch: one corner vertex or a collinear run on the line.
    std::size_t j1 = sa == 0 ? i : i + 1;
    std::size_t j2 = j1;
    while (j2 + 1 < n && sign_of(f[j2 + 1], scale[j2 + 1]) == 0) ++j2;
    const int before = j1 > 0 ? sign_of(f[j1 - 1], scale[j1 - 1]) : 0;
    const int after = j2 + 1 < n ? sign_of(f[j2 + 1], scale[j2 + 1]) : 0;
    if (before * after < 0) {
      // The path changes sides across the stretch.  "Slightly missed"
      // semantics places the detection where the path leaves the line.
      const std::size_t k = skip_tangential ? j2 : j1;
      return Hit{path.vertices[k], path.cum_len[k], HitKind::Crossing};
    }
    if (!skip_tangential) {
      return Hit{path.vertices[j1], path.cum_len[j1], HitKind::Tangential};
    }
    i = j2 + 1;
  }
  return std::nullopt;
}

Point mirror(Point p) { return {-p.x, p.y}; }

RaySpec mirror(const RaySpec& ray) {
  RaySpec m = ray;
  m.side = ray.side == Side::Right ? Side::Left : Side::Right;
  m.anchor = mirror(ray.anchor);
  return m;
}

SearchPath mirror(const SearchPath& path) {
  SearchPath m;
  m.vertices.reserve(path.vertices.size());
  for (const Point& v : path.vertices) m.vertices.push_back(mirror(v));
  m.cum_len = path.cum_len;
  return m;
}

}  // namespace raysearch
