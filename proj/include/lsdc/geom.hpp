#pragma once

// Geometric primitives for the line-separable coverage problem.
//
// Everything here works in the normalized frame: the separating line is the
// x-axis, points live on or above it and disk centers on or below it. A
// region only matters through its part above the axis, so "extent" and
// "upper boundary" always refer to that part.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace lsdc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Membership and envelope comparisons use raw double arithmetic on squared
// distances and line evaluations. Boundaries count as inside. Coordinates are
// bounded at load time so squared distances keep enough precision.
struct TolerancePolicy {
  static constexpr double max_abs_coordinate = 1e6;
  static constexpr bool closed_regions = true;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  std::size_t id = 0;
};

// Canonical point order: (x, id). Equal abscissas are broken by input id.
inline bool x_order(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.id < b.id);
}

enum class RegionKind : std::uint8_t { disk, lower_halfplane };

// A disk (center, radius) or a lower half-plane y <= slope * x + intercept.
struct Region {
  RegionKind kind = RegionKind::disk;
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t id = 0;

  static Region disk(double cx, double cy, double radius, std::size_t id = 0) {
    Region r;
    r.kind = RegionKind::disk;
    r.cx = cx;
    r.cy = cy;
    r.radius = radius;
    r.id = id;
    return r;
  }

  static Region lower_halfplane(double slope, double intercept, std::size_t id = 0) {
    Region r;
    r.kind = RegionKind::lower_halfplane;
    r.slope = slope;
    r.intercept = intercept;
    r.id = id;
    return r;
  }

  bool is_disk() const { return kind == RegionKind::disk; }

  // Same shape, ignoring the id.
  bool same_shape(const Region& o) const {
    if (kind != o.kind) return false;
    if (is_disk()) return cx == o.cx && cy == o.cy && radius == o.radius;
    return slope == o.slope && intercept == o.intercept;
  }
};

// Closed x-interval, endpoints may be infinite. lo > hi encodes "empty".
struct Extent {
  double lo = kInf;
  double hi = -kInf;

  bool empty() const { return lo > hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Extent& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
};

class DegenerateRegions : public std::invalid_argument {
 public:
  DegenerateRegions() : std::invalid_argument("coincident regions have no isolated crossing") {}
};

inline bool point_in_region(const Region& s, const Point& p) {
  if (s.is_disk()) {
    const double dx = p.x - s.cx;
    const double dy = p.y - s.cy;
    return dx * dx + dy * dy <= s.radius * s.radius;
  }
  return p.y <= s.slope * p.x + s.intercept;
}

inline Extent region_extent(const Region& s) {
  if (s.is_disk()) {
    const double w2 = s.radius * s.radius - s.cy * s.cy;
    if (w2 < 0.0) return {};
    const double w = std::sqrt(w2);
    Extent e{s.cx - w, s.cx + w};
    // Rounding may leave an endpoint a few ulps outside; pull it back in.
    for (int k = 0; k < 8 && !point_in_region(s, {e.lo, 0.0}); ++k) e.lo = std::nextafter(e.lo, s.cx);
    for (int k = 0; k < 8 && !point_in_region(s, {e.hi, 0.0}); ++k) e.hi = std::nextafter(e.hi, s.cx);
    return e;
  }
  if (s.slope == 0.0) {
    if (s.intercept < 0.0) return {};
    return {-kInf, kInf};
  }
  const double root = -s.intercept / s.slope;
  if (s.slope > 0.0) return {root, kInf};
  return {-kInf, root};
}

// Height of the region's upper boundary at abscissa x; absent outside the extent.
inline std::optional<double> upper_boundary_y(const Region& s, double x) {
  if (s.is_disk()) {
    const Extent e = region_extent(s);
    if (!e.contains(x)) return std::nullopt;
    const double dx = x - s.cx;
    const double h2 = std::max(0.0, s.radius * s.radius - dx * dx);
    return std::max(0.0, s.cy + std::sqrt(h2));
  }
  const double y = s.slope * x + s.intercept;
  if (y < 0.0) return std::nullopt;
  return y;
}

// Up to two crossings of the boundaries at or above the axis.
struct Crossings {
  std::size_t count = 0;
  double x[2] = {0.0, 0.0};
  double y[2] = {0.0, 0.0};

  void add(double px, double py) {
    x[count] = px;
    y[count] = py;
    ++count;
  }
};

namespace detail {

inline auto shape_key(const Region& s) {
  return s.is_disk() ? std::make_tuple(s.cx, s.cy, s.radius) : std::make_tuple(s.slope, s.intercept, 0.0);
}

// Intersection points of two circles; returns false when they do not meet.
inline bool circle_intersections(double ax, double ay, double ar, double bx, double by, double br,
                                 double out_x[2], double out_y[2]) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double d2 = dx * dx + dy * dy;
  if (d2 == 0.0) return false;
  const double d = std::sqrt(d2);
  const double a = (ar * ar - br * br + d2) / (2.0 * d);
  const double h2 = ar * ar - a * a;
  if (h2 < 0.0) return false;
  const double h = std::sqrt(h2);
  const double ux = dx / d;
  const double uy = dy / d;
  const double mx = ax + a * ux;
  const double my = ay + a * uy;
  out_x[0] = mx - h * uy;
  out_y[0] = my + h * ux;
  out_x[1] = mx + h * uy;
  out_y[1] = my - h * ux;
  return true;
}

}  // namespace detail

// All boundary crossings with y >= 0, sorted by x. Mixed kinds never cross
// (they never share an admissible family). The result does not depend on the
// argument order.
inline Crossings upper_crossings(const Region& s1, const Region& s2) {
  Crossings out;
  if (s1.kind != s2.kind || s1.same_shape(s2)) return out;
  const Region& s = detail::shape_key(s1) <= detail::shape_key(s2) ? s1 : s2;
  const Region& t = &s == &s1 ? s2 : s1;
  if (s.is_disk()) {
    double xs[2];
    double ys[2];
    if (!detail::circle_intersections(s.cx, s.cy, s.radius, t.cx, t.cy, t.radius, xs, ys)) return out;
    const bool tangent = xs[0] == xs[1] && ys[0] == ys[1];
    for (int k = 0; k < (tangent ? 1 : 2); ++k)
      if (ys[k] >= 0.0) out.add(xs[k], ys[k]);
    if (out.count == 2 && out.x[1] < out.x[0]) {
      std::swap(out.x[0], out.x[1]);
      std::swap(out.y[0], out.y[1]);
    }
    return out;
  }
  if (s.slope == t.slope) return out;
  const double x = (t.intercept - s.intercept) / (s.slope - t.slope);
  const double y = s.slope * x + s.intercept;
  if (y >= 0.0) out.add(x, y);
  return out;
}

// The crossing of the two upper boundaries above the axis, if any. For pairs
// outside every admissible family that cross twice, the higher crossing wins.
inline std::optional<double> boundary_crossing_x(const Region& s1, const Region& s2) {
  if (s1.same_shape(s2)) throw DegenerateRegions();
  const Crossings c = upper_crossings(s1, s2);
  if (c.count == 0) return std::nullopt;
  if (c.count == 1) return c.x[0];
  return c.y[0] >= c.y[1] ? c.x[0] : c.x[1];
}

// True iff the part of s2 above the axis lies inside the part of s1 above it.
inline bool contains_region(const Region& s1, const Region& s2) {
  if (s1.kind != s2.kind) return false;
  const Extent e2 = region_extent(s2);
  if (e2.empty()) return true;
  if (s1.is_disk()) return region_extent(s1).contains(e2);

  // s1 must dominate s2's boundary line wherever that line is above the axis.
  const double ds = s1.slope - s2.slope;
  if (s2.slope == 0.0) return ds == 0.0 && s2.intercept <= s1.intercept;
  if (s2.slope > 0.0 && ds < 0.0) return false;
  if (s2.slope < 0.0 && ds > 0.0) return false;
  const double root = -s2.intercept / s2.slope;
  return s1.slope * root + s1.intercept >= 0.0;
}

}  // namespace lsdc
