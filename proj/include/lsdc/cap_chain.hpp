#pragma once

// Common intersection, below the axis, of congruent disks centered at a point
// set. Its lower boundary is the upper envelope of the disks' lower arcs; two
// such arcs cross at most once and the one whose center is further left wins
// to the right of the crossing, so a single stack pass over the points in
// x-order builds the chain.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lsdc/geom.hpp"

namespace lsdc {

class CapChain {
 public:
  CapChain() = default;

  // `pts` sorted by (x, id), radius > 0.
  CapChain(std::span<const Point> pts, double radius) : radius_(radius) {
    if (pts.empty()) return;
    points_.assign(pts.begin(), pts.end());
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (points_[k].x > points_[max_x_].x) max_x_ = k;
      if (points_[k].x < points_[min_x_].x) min_x_ = k;
    }
    lo_ = points_[max_x_].x - radius_;
    hi_ = points_[min_x_].x + radius_;
    if (lo_ > hi_) return;
    build();
  }

  bool empty_set() const { return points_.empty(); }
  double radius() const { return radius_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  // Chain pieces from left to right: owners()[k] spans [breaks[k-1], breaks[k]]
  // within [lo, hi].
  std::span<const std::uint32_t> owners() const { return owners_; }
  std::span<const double> breaks() const { return breaks_; }
  const Point& point(std::size_t k) const { return points_[k]; }

  // Lower arc of the disk centered at p, evaluated inside [p.x - r, p.x + r].
  double lower_arc(const Point& p, double x) const {
    const double dx = x - p.x;
    return p.y - std::sqrt(std::max(0.0, radius_ * radius_ - dx * dx));
  }

  // True iff every point is within distance r of c.
  bool contains(const Point& c) const {
    if (points_.empty()) return true;
    if (!within(points_[max_x_], c) || !within(points_[min_x_], c)) return false;
    if (owners_.empty()) return false;
    const std::size_t piece =
        static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), c.x) - breaks_.begin());
    const std::size_t first = piece == 0 ? 0 : piece - 1;
    const std::size_t last = std::min(piece + 1, owners_.size() - 1);
    for (std::size_t k = first; k <= last; ++k)
      if (!within(points_[owners_[k]], c)) return false;
    return true;
  }

 private:
  bool within(const Point& p, const Point& c) const {
    const double dx = p.x - c.x;
    const double dy = p.y - c.y;
    return dx * dx + dy * dy <= radius_ * radius_;
  }

  // Abscissa where the arc of `right` (larger center x) stops dominating the
  // arc of `left`, clamped to [lo, hi].
  double crossing(const Point& left, const Point& right) const {
    if (lower_arc(left, lo_) >= lower_arc(right, lo_)) return lo_;
    if (lower_arc(left, hi_) <= lower_arc(right, hi_)) return hi_;
    const double dx = right.x - left.x;
    const double dy = right.y - left.y;
    const double d2 = dx * dx + dy * dy;
    const double d = std::sqrt(d2);
    const double h = std::sqrt(std::max(0.0, radius_ * radius_ - d2 / 4.0));
    const double mx = left.x + dx / 2.0;
    const double my = left.y + dy / 2.0;
    // Of the two circle intersections, the lower one lies on both lower arcs.
    const double x1 = mx - h * dy / d;
    const double y1 = my + h * dx / d;
    const double x2 = mx + h * dy / d;
    const double y2 = my - h * dx / d;
    return std::clamp(y1 <= y2 ? x1 : x2, lo_, hi_);
  }

  void build() {
    struct Entry {
      std::uint32_t owner;
      double left;  // left end of the piece; the right end is the previous entry's left
    };
    std::vector<Entry> stack;
    for (std::uint32_t k = 0; k < points_.size(); ++k) {
      const Point& a = points_[k];
      bool skip = false;
      while (!stack.empty()) {
        const Entry& top = stack.back();
        const Point& t = points_[top.owner];
        const double right = stack.size() >= 2 ? stack[stack.size() - 2].left : hi_;
        double x;
        if (t.x == a.x)
          x = a.y > t.y ? hi_ : lo_;
        else
          x = crossing(t, a);
        if (x >= right) {
          stack.pop_back();
          continue;
        }
        if (x <= lo_) {
          skip = true;
          break;
        }
        stack.back().left = x;
        break;
      }
      if (!skip) stack.push_back({k, lo_});
    }
    for (std::size_t k = stack.size(); k-- > 0;) {
      owners_.push_back(stack[k].owner);
      if (k > 0) breaks_.push_back(stack[k - 1].left);
    }
  }

  double radius_ = 0.0;
  std::vector<Point> points_;
  std::size_t max_x_ = 0;
  std::size_t min_x_ = 0;
  double lo_ = kInf;
  double hi_ = -kInf;
  std::vector<std::uint32_t> owners_;
  std::vector<double> breaks_;
};

// Upper envelope, over the slope a, of the lines b = y - a x of a point set.
// A lower half-plane y <= a0 x + b0 holds every point iff b0 is on or above it.
class DualEnvelope {
 public:
  DualEnvelope() = default;

  // `pts` sorted by (x, id).
  explicit DualEnvelope(std::span<const Point> pts) {
    // Line slopes are -x, so walk the points right to left for ascending slope.
    for (std::size_t k = pts.size(); k-- > 0;) {
      const Point& p = pts[k];
      if (!lines_.empty() && lines_.back().x == p.x) {
        if (lines_.back().y >= p.y) continue;
        lines_.pop_back();
        if (!breaks_.empty()) breaks_.pop_back();
      }
      while (!lines_.empty()) {
        const double at = meet(lines_.back(), p);
        if (!breaks_.empty() && at <= breaks_.back()) {
          lines_.pop_back();
          breaks_.pop_back();
          continue;
        }
        breaks_.push_back(at);
        break;
      }
      lines_.push_back(p);
    }
  }

  std::span<const Point> lines() const { return lines_; }
  std::span<const double> breaks() const { return breaks_; }

  double height(double a) const {
    const Point& p = lines_[piece_at(a)];
    return p.y - a * p.x;
  }

  // True iff every point satisfies y <= a x + b.
  bool covered_by(const Region& s) const {
    if (lines_.empty()) return true;
    const std::size_t piece = piece_at(s.slope);
    const std::size_t first = piece == 0 ? 0 : piece - 1;
    const std::size_t last = std::min(piece + 1, lines_.size() - 1);
    for (std::size_t k = first; k <= last; ++k)
      if (!point_in_region(s, lines_[k])) return false;
    return true;
  }

 private:
  // Slope where the line of q (steeper) overtakes the line of p.
  static double meet(const Point& p, const Point& q) { return (q.y - p.y) / (q.x - p.x); }

  std::size_t piece_at(double a) const {
    return static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), a) - breaks_.begin());
  }

  std::vector<Point> lines_;
  std::vector<double> breaks_;
};

}  // namespace lsdc
