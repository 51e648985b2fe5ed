#pragma once

// Seeded random instances for every variant.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lsdc/instance.hpp"

namespace lsdc {

struct GenParams {
  Variant variant = Variant::unit_disk;
  std::size_t n = 10;
  std::size_t m = 10;
  double span = 0.0;  // width of the x-range; 0 picks one from m
  double radius = 1.0;
  double min_radius = 0.5;
  double max_radius = 2.0;
  std::uint64_t seed = 1;
  bool feasible_only = true;
};

namespace detail {

// Uniform double in [lo, hi) from the top 53 bits, identical on every platform.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 rng_;
};

inline double default_span(const GenParams& gp) {
  switch (gp.variant) {
    case Variant::unit_disk:
    case Variant::line_separable: return std::max(4.0 * gp.radius, 0.5 * static_cast<double>(gp.m) * gp.radius);
    case Variant::line_constrained:
      return std::max(4.0 * gp.max_radius, 0.5 * static_cast<double>(gp.m) * (gp.min_radius + gp.max_radius) / 2.0);
    case Variant::lower_halfplane: return 10.0;
  }
  return 10.0;
}

}  // namespace detail

// Deterministic in the parameters. With feasible_only, each point is resampled
// until some region covers it; a point that cannot be placed in 10^4 draws
// aborts with guard_exceeded.
inline Instance gen_instance(const GenParams& gp) {
  detail::Uniform uni(gp.seed);
  const double span = gp.span > 0.0 ? gp.span : detail::default_span(gp);
  Instance inst;
  inst.variant = gp.variant;
  inst.line_y = 0.0;

  double y_top = 0.0;
  double y_bottom = 0.0;
  double max_r = 0.0;
  for (std::size_t i = 0; i < gp.m; ++i) {
    switch (gp.variant) {
      case Variant::unit_disk:
      case Variant::line_separable:
        inst.regions.push_back(Region::disk(uni(0.0, span), uni(-0.9 * gp.radius, 0.0), gp.radius, i));
        max_r = gp.radius;
        y_top = gp.radius;
        break;
      case Variant::line_constrained: {
        const double r = uni(gp.min_radius, gp.max_radius);
        inst.regions.push_back(Region::disk(uni(0.0, span), 0.0, r, i));
        max_r = std::max(max_r, r);
        y_top = gp.max_radius;
        y_bottom = -gp.max_radius;
        break;
      }
      case Variant::lower_halfplane: {
        const double a = uni(-2.0, 2.0);
        const double x0 = uni(0.0, span);
        const double y0 = uni(0.0, span / 2.0);
        inst.regions.push_back(Region::lower_halfplane(a, y0 - a * x0, i));
        y_top = span / 2.0;
        break;
      }
    }
  }
  if (gp.variant == Variant::lower_halfplane) y_top = span / 2.0;
  if (gp.m == 0) y_top = std::max(y_top, 1.0);

  std::vector<Region> by_x = inst.regions;
  std::sort(by_x.begin(), by_x.end(), [](const Region& a, const Region& b) { return a.cx < b.cx; });
  auto covered = [&](const Point& p) {
    if (gp.variant == Variant::lower_halfplane)
      return std::any_of(by_x.begin(), by_x.end(), [&](const Region& s) { return point_in_region(s, p); });
    const Point q{p.x, std::fabs(p.y), p.id};
    auto it = std::lower_bound(by_x.begin(), by_x.end(), p.x - max_r,
                               [](const Region& s, double x) { return s.cx < x; });
    for (; it != by_x.end() && it->cx <= p.x + max_r; ++it)
      if (point_in_region(*it, q)) return true;
    return false;
  };

  constexpr int kBudget = 10000;
  for (std::size_t j = 0; j < gp.n; ++j) {
    Point p{0.0, 0.0, j};
    int tries = 0;
    do {
      if (++tries > kBudget)
        throw Error(ErrorCode::guard_exceeded, "could not place point " + std::to_string(j) + " inside the union");
      p.x = uni(0.0, span);
      p.y = uni(y_bottom, y_top);
    } while (gp.feasible_only && !covered(p));
    inst.points.push_back(p);
  }
  return inst;
}

}  // namespace lsdc
