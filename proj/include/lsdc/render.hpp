#pragma once

// Static SVG picture of an instance and, optionally, a solution.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <string>

#include "lsdc/instance.hpp"
#include "lsdc/solve.hpp"

namespace lsdc {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace detail

inline std::string render_svg(const Instance& raw, const Solution* sol = nullptr) {
  const Instance inst = normalize(raw);
  double x0 = kInf, x1 = -kInf, top = 0.0;
  for (const Point& p : inst.points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    top = std::max(top, p.y);
  }
  for (const Region& s : inst.regions) {
    if (!s.is_disk()) continue;
    const Extent e = region_extent(s);
    if (e.empty()) continue;
    x0 = std::min(x0, e.lo);
    x1 = std::max(x1, e.hi);
    top = std::max(top, s.cy + s.radius);
  }
  if (x0 > x1) {
    x0 = -1.0;
    x1 = 1.0;
  }
  if (top <= 0.0) top = std::max(1.0, (x1 - x0) / 4.0);
  const double pad = 0.05 * std::max(x1 - x0, top);
  x0 -= pad;
  x1 += pad;
  top += pad;
  const double bottom = -pad;

  constexpr double kWidth = 800.0;
  const double scale = kWidth / (x1 - x0);
  const double height = (top - bottom) * scale;
  auto sx = [&](double x) { return detail::num((x - x0) * scale); };
  auto sy = [&](double y) { return detail::num((top - y) * scale); };

  std::set<std::size_t> chosen;
  if (sol) chosen.insert(sol->chosen.begin(), sol->chosen.end());

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::num(kWidth) +
         "\" height=\"" + detail::num(height) + "\" viewBox=\"0 0 " + detail::num(kWidth) + " " +
         detail::num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<line x1=\"0\" y1=\"" + sy(0.0) + "\" x2=\"" + detail::num(kWidth) + "\" y2=\"" + sy(0.0) +
         "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";

  for (const Region& s : inst.regions) {
    const bool picked = chosen.count(s.id) > 0;
    const std::string style = picked ? "stroke=\"#c0392b\" stroke-width=\"2.5\"" : "stroke=\"#7f8c8d\" stroke-width=\"1\"";
    const Extent e = region_extent(s);
    if (e.empty()) continue;
    if (s.is_disk()) {
      const std::string r = detail::num(s.radius * scale);
      out += "<path id=\"s" + std::to_string(s.id) + "\" d=\"M " + sx(e.lo) + " " + sy(0.0) + " A " + r + " " + r +
             " 0 0 1 " + sx(e.hi) + " " + sy(0.0) + "\" fill=\"none\" " + style + "/>\n";
    } else {
      const double a = std::max(x0, e.lo);
      const double b = std::min(x1, e.hi);
      if (a > b) continue;
      out += "<line id=\"s" + std::to_string(s.id) + "\" x1=\"" + sx(a) + "\" y1=\"" + sy(s.slope * a + s.intercept) +
             "\" x2=\"" + sx(b) + "\" y2=\"" + sy(s.slope * b + s.intercept) + "\" " + style + "/>\n";
    }
  }
  for (const Point& p : inst.points) {
    const bool missed = sol && sol->witness && *sol->witness == p.id;
    out += "<circle id=\"p" + std::to_string(p.id) + "\" cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"3\" fill=\"" +
           (missed ? "#e67e22" : "#2c3e50") + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lsdc
