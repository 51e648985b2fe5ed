#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lsdc/geom.hpp"

namespace lsdc {

enum class Variant { unit_disk, line_constrained, line_separable, lower_halfplane };

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::unit_disk: return "unit-disk";
    case Variant::line_constrained: return "line-constrained";
    case Variant::line_separable: return "line-separable";
    case Variant::lower_halfplane: return "lower-halfplane";
  }
  return "?";
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  for (Variant v : {Variant::unit_disk, Variant::line_constrained, Variant::line_separable,
                    Variant::lower_halfplane})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

enum class ErrorCode {
  bad_schema,
  coordinate_range,
  point_below_line,
  center_above_line,
  center_off_line,
  mixed_radii,
  region_kind_mismatch,
  family_violation,
  backend_mismatch,
  guard_exceeded,
  unknown_id,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Instance {
  Variant variant = Variant::line_separable;
  double line_y = 0.0;
  std::vector<Point> points;    // ids are input positions
  std::vector<Region> regions;  // ids are input positions
};

// Regions sorted by leftmost extent with contained and vacuous ones removed.
// Indices into `kept` are the "sorted indices" used throughout the pipeline.
struct SortedInstance {
  Variant variant = Variant::line_separable;
  std::vector<Region> kept;
  std::vector<Extent> extents;         // parallel to kept
  std::vector<std::size_t> orig_of;    // sorted index -> input id
  std::vector<std::size_t> dropped;    // input ids, ascending
  std::vector<Point> points;           // sorted by (x, id)
};

namespace detail {

inline void check_coordinate(double v, const char* what) {
  if (!std::isfinite(v) || std::fabs(v) > TolerancePolicy::max_abs_coordinate)
    throw Error(ErrorCode::coordinate_range,
                std::string(what) + " must be finite with magnitude <= 1e6");
}

inline bool wants_halfplanes(Variant v) { return v == Variant::lower_halfplane; }

}  // namespace detail

// Shifts the separating line to y = 0 and checks which side everything is on.
// Line-constrained instances reflect points below the line onto it.
inline Instance normalize(const Instance& raw) {
  detail::check_coordinate(raw.line_y, "line_y");
  Instance out;
  out.variant = raw.variant;
  out.line_y = 0.0;
  out.points.reserve(raw.points.size());
  out.regions.reserve(raw.regions.size());

  for (const Point& p : raw.points) {
    detail::check_coordinate(p.x, "point x");
    detail::check_coordinate(p.y, "point y");
    Point q = p;
    q.y = p.y - raw.line_y;
    if (q.y < 0.0) {
      if (raw.variant != Variant::line_constrained)
        throw Error(ErrorCode::point_below_line, "point " + std::to_string(p.id) + " lies below the line");
      q.y = -q.y;
    }
    out.points.push_back(q);
  }

  const bool halfplanes = detail::wants_halfplanes(raw.variant);
  for (const Region& s : raw.regions) {
    if (s.is_disk() == halfplanes)
      throw Error(ErrorCode::region_kind_mismatch,
                  "region " + std::to_string(s.id) + " does not match variant " + std::string(to_string(raw.variant)));
    Region t = s;
    if (s.is_disk()) {
      detail::check_coordinate(s.cx, "disk cx");
      detail::check_coordinate(s.cy, "disk cy");
      detail::check_coordinate(s.radius, "disk radius");
      if (!(s.radius > 0.0))
        throw Error(ErrorCode::bad_schema, "disk " + std::to_string(s.id) + " needs a positive radius");
      t.cy = s.cy - raw.line_y;
      if (t.cy > 0.0)
        throw Error(ErrorCode::center_above_line, "disk " + std::to_string(s.id) + " has its center above the line");
      if (raw.variant == Variant::line_constrained && t.cy != 0.0)
        throw Error(ErrorCode::center_off_line, "disk " + std::to_string(s.id) + " is not centered on the line");
    } else {
      detail::check_coordinate(s.slope, "half-plane slope");
      detail::check_coordinate(s.intercept, "half-plane intercept");
      t.intercept = s.intercept - raw.line_y;
    }
    out.regions.push_back(t);
  }

  if (raw.variant == Variant::unit_disk && !out.regions.empty()) {
    const double r = out.regions.front().radius;
    for (const Region& s : out.regions)
      if (s.radius != r) throw Error(ErrorCode::mixed_radii, "unit-disk instance has mixed radii");
  }
  return out;
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks a normalized instance. The pairwise single-crossing test is O(m^2)
// and runs only for the line-separable variant, which is never generated large.
inline ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  auto flag = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  for (const Point& p : inst.points)
    if (p.y < inst.line_y) flag("point " + std::to_string(p.id) + " is below the line");

  const bool halfplanes = detail::wants_halfplanes(inst.variant);
  for (const Region& s : inst.regions) {
    if (s.is_disk() == halfplanes) {
      flag("region " + std::to_string(s.id) + " has the wrong kind for the variant");
      continue;
    }
    if (!s.is_disk()) continue;
    if (s.cy > inst.line_y) flag("disk " + std::to_string(s.id) + " has its center above the line");
    if (inst.variant == Variant::line_constrained && s.cy != inst.line_y)
      flag("disk " + std::to_string(s.id) + " is not centered on the line");
  }
  if (inst.variant == Variant::unit_disk) {
    for (const Region& s : inst.regions)
      if (s.radius != inst.regions.front().radius) {
        flag("unit-disk instance has mixed radii");
        break;
      }
  }
  if (inst.variant == Variant::line_separable) {
    for (std::size_t i = 0; i < inst.regions.size(); ++i)
      for (std::size_t j = i + 1; j < inst.regions.size(); ++j) {
        const Region& a = inst.regions[i];
        const Region& b = inst.regions[j];
        if (!a.is_disk() || !b.is_disk() || a.same_shape(b)) continue;
        const Crossings c = upper_crossings(a, b);
        std::size_t strictly_above = 0;
        for (std::size_t k = 0; k < c.count; ++k) strictly_above += c.y[k] > 0.0;
        if (strictly_above > 1)
          flag("disks " + std::to_string(a.id) + " and " + std::to_string(b.id) +
               " cross twice above the line");
      }
  }
  return report;
}

namespace detail {

inline void prune_disks(const std::vector<Region>& regions, SortedInstance& out) {
  struct Item {
    Extent e;
    std::size_t pos;
  };
  std::vector<Item> items;
  items.reserve(regions.size());
  for (std::size_t k = 0; k < regions.size(); ++k) {
    const Extent e = region_extent(regions[k]);
    if (e.empty())
      out.dropped.push_back(regions[k].id);
    else
      items.push_back({e, k});
  }
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.e.lo != b.e.lo) return a.e.lo < b.e.lo;
    if (a.e.hi != b.e.hi) return a.e.hi > b.e.hi;
    return regions[a.pos].id < regions[b.pos].id;
  });
  double reach = -kInf;
  for (const Item& it : items) {
    if (it.e.hi <= reach) {
      out.dropped.push_back(regions[it.pos].id);
      continue;
    }
    reach = it.e.hi;
    out.kept.push_back(regions[it.pos]);
    out.extents.push_back(it.e);
  }
}

// Lower half-planes ordered by slope. A falling plane can only be contained by
// one with smaller slope and a right root at least as far right; a rising
// plane only by one with larger slope and a left root at least as far left.
inline void prune_halfplanes(const std::vector<Region>& regions, SortedInstance& out) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < regions.size(); ++k) {
    if (region_extent(regions[k]).empty())
      out.dropped.push_back(regions[k].id);
    else
      order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Region& s = regions[a];
    const Region& t = regions[b];
    if (s.slope != t.slope) return s.slope < t.slope;
    if (s.intercept != t.intercept) return s.intercept > t.intercept;
    return s.id < t.id;
  });

  std::vector<std::size_t> unique;
  for (std::size_t k : order) {
    if (!unique.empty() && regions[unique.back()].slope == regions[k].slope)
      out.dropped.push_back(regions[k].id);
    else
      unique.push_back(k);
  }

  std::vector<char> keep(unique.size(), 1);
  double right_reach = -kInf;
  for (std::size_t u = 0; u < unique.size(); ++u) {
    const Region& s = regions[unique[u]];
    if (s.slope >= 0.0) break;
    const double root = -s.intercept / s.slope;
    if (root <= right_reach)
      keep[u] = 0;
    else
      right_reach = root;
  }
  double left_reach = kInf;
  for (std::size_t u = unique.size(); u-- > 0;) {
    const Region& s = regions[unique[u]];
    if (s.slope <= 0.0) break;
    const double root = -s.intercept / s.slope;
    if (root >= left_reach)
      keep[u] = 0;
    else
      left_reach = root;
  }
  for (std::size_t u = 0; u < unique.size(); ++u) {
    const Region& s = regions[unique[u]];
    if (!keep[u]) {
      out.dropped.push_back(s.id);
      continue;
    }
    out.kept.push_back(s);
    out.extents.push_back(region_extent(s));
  }
}

}  // namespace detail

// Removes vacuous and contained regions and sorts the rest so that leftmost
// and rightmost extents increase together. Duplicates keep the lowest id.
inline SortedInstance prune_contained(const Instance& inst) {
  SortedInstance out;
  out.variant = inst.variant;
  if (detail::wants_halfplanes(inst.variant))
    detail::prune_halfplanes(inst.regions, out);
  else
    detail::prune_disks(inst.regions, out);
  std::sort(out.dropped.begin(), out.dropped.end());
  out.orig_of.reserve(out.kept.size());
  for (const Region& s : out.kept) out.orig_of.push_back(s.id);
  out.points = inst.points;
  std::sort(out.points.begin(), out.points.end(), x_order);
  return out;
}

}  // namespace lsdc
