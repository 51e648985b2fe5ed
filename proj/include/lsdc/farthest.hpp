#pragma once

// Farthest-point queries over a small planar point set.
//
// Only convex hull vertices can be farthest from anything, so the structure
// keeps the hull, builds the farthest-point Voronoi diagram of its vertices
// (via the farthest-point Delaunay triangulation of the convex polygon),
// clips the diagram to a box and answers queries with an x-slab
// decomposition: one binary search for the slab, one among the slab's edges.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsdc/geom.hpp"

namespace lsdc {

struct Box {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  bool contains(const Point& p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
};

inline double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double dist2(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Convex hull in counter-clockwise order without collinear or repeated
// vertices. Input must be sorted by (x, y); runs in linear time.
inline std::vector<Point> convex_hull_sorted(std::span<const Point> pts) {
  std::vector<Point> hull;
  if (pts.empty()) return hull;
  hull.reserve(pts.size() + 1);
  for (const Point& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    if (hull.empty() || hull.back().x != p.x || hull.back().y != p.y) hull.push_back(p);
  }
  if (hull.size() == 1) return hull;
  const std::size_t lower = hull.size();
  for (std::size_t k = pts.size() - 1; k-- > 0;) {
    const Point& p = pts[k];
    while (hull.size() > lower && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  hull.pop_back();
  return hull;
}

class FarthestStruct {
 public:
  FarthestStruct() = default;

  // `pts` sorted by (x, id); `box` must contain every later query.
  FarthestStruct(std::span<const Point> pts, const Box& box) : box_(box) {
    bool resort = false;
    for (std::size_t k = 1; k < pts.size(); ++k) resort |= pts[k - 1].x == pts[k].x;
    if (resort) {
      std::vector<Point> by_xy(pts.begin(), pts.end());
      std::sort(by_xy.begin(), by_xy.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.id < b.id)));
      });
      hull_ = convex_hull_sorted(by_xy);
    } else {
      hull_ = convex_hull_sorted(pts);
    }
    build_diagram();
  }

  bool empty() const { return hull_.empty(); }
  std::span<const Point> hull() const { return hull_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t slab_count() const { return slab_x_.empty() ? 0 : slab_x_.size() - 1; }

  const Point& farthest_point(const Point& q) const {
    if (hull_.empty()) throw std::logic_error("farthest_point on an empty set");
    if (hull_.size() == 1) return hull_[0];
    if (!box_.contains(q)) return hull_[brute(q)];
    std::size_t s = static_cast<std::size_t>(std::upper_bound(slab_x_.begin(), slab_x_.end(), q.x) - slab_x_.begin());
    s = std::clamp<std::size_t>(s, 1, slab_x_.size() - 1) - 1;
    const std::uint32_t first = slab_offset_[s];
    const std::uint32_t last = slab_offset_[s + 1];
    std::uint32_t lo = first;
    std::uint32_t hi = last;
    while (lo < hi) {
      const std::uint32_t mid = lo + (hi - lo) / 2;
      if (slab_lines_[mid].slope * q.x + slab_lines_[mid].intercept <= q.y)
        lo = mid + 1;
      else
        hi = mid;
    }
    return hull_[face_site_[first + s + (lo - first)]];
  }

 private:
  struct Segment {
    Point a;
    Point b;
    std::uint32_t u = 0;
    std::uint32_t w = 0;
  };
  struct Line {
    double slope = 0.0;
    double intercept = 0.0;
  };

  std::size_t brute(const Point& q) const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < hull_.size(); ++k) {
      const double d = dist2(hull_[k], q);
      const double b = dist2(hull_[best], q);
      if (d > b || (d == b && hull_[k].id < hull_[best].id)) best = k;
    }
    return best;
  }

  static Point circumcenter(const Point& a, const Point& b, const Point& c) {
    const double bx = b.x - a.x;
    const double by = b.y - a.y;
    const double cx = c.x - a.x;
    const double cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    return {a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d, 0};
  }

  // Clips origin + t * dir, t in [t0, t1], to the box (Liang-Barsky).
  bool clip(const Point& origin, double dx, double dy, double t0, double t1, Point& a, Point& b) const {
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {origin.x - box_.x0, box_.x1 - origin.x, origin.y - box_.y0, box_.y1 - origin.y};
    for (int k = 0; k < 4; ++k) {
      if (p[k] == 0.0) {
        if (q[k] < 0.0) return false;
        continue;
      }
      const double r = q[k] / p[k];
      if (p[k] < 0.0)
        t0 = std::max(t0, r);
      else
        t1 = std::min(t1, r);
    }
    if (t0 > t1 || !std::isfinite(t0) || !std::isfinite(t1)) return false;
    a = {origin.x + t0 * dx, origin.y + t0 * dy, 0};
    b = {origin.x + t1 * dx, origin.y + t1 * dy, 0};
    return true;
  }

  void add_piece(const Point& origin, double dx, double dy, double t0, double t1, std::uint32_t u, std::uint32_t w) {
    Segment s;
    if (clip(origin, dx, dy, t0, t1, s.a, s.b)) {
      s.u = u;
      s.w = w;
      edges_.push_back(s);
    }
  }

  // Farthest-point Delaunay triangulation of the hull polygon. For a chord
  // (i, j) the apex k is the chain vertex whose circle through v_i, v_j is
  // the smallest one still enclosing the whole chain.
  std::vector<std::array<std::uint32_t, 3>> triangulate() const {
    std::vector<std::array<std::uint32_t, 3>> tris;
    const std::uint32_t h = static_cast<std::uint32_t>(hull_.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> todo = {{0, h - 1}};
    while (!todo.empty()) {
      const auto [i, j] = todo.back();
      todo.pop_back();
      const Point& vi = hull_[i];
      const Point& vj = hull_[j];
      const double mx = (vi.x + vj.x) / 2.0;
      const double my = (vi.y + vj.y) / 2.0;
      const double nx = -(vj.y - vi.y);
      const double ny = vj.x - vi.x;
      const double base = (vi.x - mx) * (vi.x - mx) + (vi.y - my) * (vi.y - my);
      std::uint32_t best = i + 1;
      double best_t = kInf;
      for (std::uint32_t k = i + 1; k < j; ++k) {
        const double qx = hull_[k].x - mx;
        const double qy = hull_[k].y - my;
        const double t = (qx * qx + qy * qy - base) / (2.0 * (qx * nx + qy * ny));
        if (t < best_t) {
          best_t = t;
          best = k;
        }
      }
      tris.push_back({i, best, j});
      if (best - i >= 2) todo.push_back({i, best});
      if (j - best >= 2) todo.push_back({best, j});
    }
    return tris;
  }

  void build_diagram() {
    const std::size_t h = hull_.size();
    if (h <= 1) {
      slab_x_ = {box_.x0, box_.x1};
      slab_offset_ = {0, 0};
      face_site_ = {0};
      return;
    }
    if (h == 2) {
      const Point& u = hull_[0];
      const Point& w = hull_[1];
      const Point mid{(u.x + w.x) / 2.0, (u.y + w.y) / 2.0, 0};
      add_piece(mid, -(w.y - u.y), w.x - u.x, -kInf, kInf, 0, 1);
    } else {
      const auto tris = triangulate();
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::size_t>> owners;
      std::vector<Point> centers;
      centers.reserve(tris.size());
      for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& tri = tris[t];
        centers.push_back(circumcenter(hull_[tri[0]], hull_[tri[1]], hull_[tri[2]]));
        for (int e = 0; e < 3; ++e) {
          std::uint32_t a = tri[e];
          std::uint32_t b = tri[(e + 1) % 3];
          if (a > b) std::swap(a, b);
          owners[{a, b}].push_back(t);
        }
      }
      for (const auto& [edge, ts] : owners) {
        const auto [a, b] = edge;
        if (ts.size() == 2) {
          const Point& c0 = centers[ts[0]];
          const Point& c1 = centers[ts[1]];
          add_piece(c0, c1.x - c0.x, c1.y - c0.y, 0.0, 1.0, a, b);
          continue;
        }
        // Hull edge, directed counter-clockwise: the ray leaves the triangle's
        // circumcenter along the inward normal.
        const bool wraps = a == 0 && b == h - 1;
        const Point& from = hull_[wraps ? b : a];
        const Point& to = hull_[wraps ? a : b];
        add_piece(centers[ts[0]], -(to.y - from.y), to.x - from.x, 0.0, kInf, a, b);
      }
    }
    build_slabs();
  }

  // Site whose cell lies above a non-vertical edge: the one with smaller y.
  std::uint32_t upper_site(const Segment& s) const { return hull_[s.u].y < hull_[s.w].y ? s.u : s.w; }
  std::uint32_t lower_site(const Segment& s) const { return hull_[s.u].y < hull_[s.w].y ? s.w : s.u; }

  void build_slabs() {
    slab_x_ = {box_.x0, box_.x1};
    for (const Segment& s : edges_) {
      slab_x_.push_back(s.a.x);
      slab_x_.push_back(s.b.x);
    }
    std::sort(slab_x_.begin(), slab_x_.end());
    slab_x_.erase(std::unique(slab_x_.begin(), slab_x_.end()), slab_x_.end());

    struct Crossing {
      double y;
      std::size_t edge;
    };
    std::vector<Crossing> here;
    slab_offset_.assign(1, 0);
    for (std::size_t s = 0; s + 1 < slab_x_.size(); ++s) {
      const double xl = slab_x_[s];
      const double xr = slab_x_[s + 1];
      const double xm = xl + (xr - xl) / 2.0;
      here.clear();
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Segment& seg = edges_[e];
        if (seg.a.x == seg.b.x) continue;
        if (std::min(seg.a.x, seg.b.x) > xl || std::max(seg.a.x, seg.b.x) < xr) continue;
        const double slope = (seg.b.y - seg.a.y) / (seg.b.x - seg.a.x);
        here.push_back({seg.a.y + slope * (xm - seg.a.x), e});
      }
      std::sort(here.begin(), here.end(), [](const Crossing& a, const Crossing& b) { return a.y < b.y; });
      for (const Crossing& c : here) {
        const Segment& seg = edges_[c.edge];
        const double slope = (seg.b.y - seg.a.y) / (seg.b.x - seg.a.x);
        slab_lines_.push_back({slope, seg.a.y - slope * seg.a.x});
      }
      if (here.empty()) {
        face_site_.push_back(static_cast<std::uint32_t>(brute({xm, box_.y0 + (box_.y1 - box_.y0) / 2.0, 0})));
      } else {
        face_site_.push_back(lower_site(edges_[here.front().edge]));
        for (const Crossing& c : here) face_site_.push_back(upper_site(edges_[c.edge]));
      }
      slab_offset_.push_back(static_cast<std::uint32_t>(slab_lines_.size()));
    }
  }

  std::vector<Point> hull_;
  Box box_;
  std::vector<Segment> edges_;
  std::vector<double> slab_x_;
  std::vector<std::uint32_t> slab_offset_;  // edges of slab s: [offset[s], offset[s+1])
  std::vector<Line> slab_lines_;
  std::vector<std::uint32_t> face_site_;    // faces of slab s start at offset[s] + s
};

}  // namespace lsdc
