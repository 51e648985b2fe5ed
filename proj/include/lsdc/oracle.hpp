#pragma once

// Brute-force references. Nothing here calls into the fast pipeline: every
// function re-evaluates membership from the raw coordinates and scans.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lsdc/instance.hpp"
#include "lsdc/sigma.hpp"
#include "lsdc/solve.hpp"

namespace lsdc::oracle {

inline bool inside(const Region& s, const Point& p) {
  if (s.kind == RegionKind::lower_halfplane) return p.y <= s.slope * p.x + s.intercept;
  const double dx = p.x - s.cx;
  const double dy = p.y - s.cy;
  return dx * dx + dy * dy <= s.radius * s.radius;
}

// First and last covering index per point of `si.points`.
inline SigmaTable brute_sigma(const SortedInstance& si) {
  SigmaTable out(si.points.size());
  for (std::size_t j = 0; j < si.points.size(); ++j)
    for (std::size_t i = 0; i < si.kept.size(); ++i) {
      if (!inside(si.kept[i], si.points[j])) continue;
      if (out[j].first == SigmaEntry::kUncovered) out[j].first = static_cast<std::int32_t>(i);
      out[j].last = static_cast<std::int32_t>(i);
    }
  return out;
}

// Regions i for which some point outside i has first <= i <= last.
inline std::vector<std::size_t> brute_prunable(const SortedInstance& si, const SigmaTable& sig) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < si.kept.size(); ++i)
    for (std::size_t j = 0; j < si.points.size(); ++j) {
      if (!sig[j].covered()) continue;
      const auto ii = static_cast<std::int32_t>(i);
      if (sig[j].first <= ii && ii <= sig[j].last && !inside(si.kept[i], si.points[j])) {
        out.push_back(i);
        break;
      }
    }
  return out;
}

// Regions i with a point outside i that is covered by some region before i and
// by some region after i.
inline std::vector<std::size_t> brute_prunable_left_right(const SortedInstance& si) {
  std::vector<std::size_t> out;
  const std::size_t m = si.kept.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool hit = false;
    for (const Point& p : si.points) {
      if (inside(si.kept[i], p)) continue;
      bool left = false;
      bool right = false;
      for (std::size_t k = 0; k < i && !left; ++k) left = inside(si.kept[k], p);
      for (std::size_t k = i + 1; k < m && !right; ++k) right = inside(si.kept[k], p);
      if (left && right) {
        hit = true;
        break;
      }
    }
    if (hit) out.push_back(i);
  }
  return out;
}

// a(i): largest 1-based rank of a point outside region i covered by a region
// before i (0 if none); b(i): smallest rank of a point outside i covered by a
// region after i (n+1 if none).
inline ABEntry brute_ab(const SortedInstance& si, std::size_t i) {
  const std::size_t n = si.points.size();
  ABEntry e{i, 0, n + 1};
  for (std::size_t j = 0; j < n; ++j) {
    const Point& p = si.points[j];
    if (inside(si.kept[i], p)) continue;
    for (std::size_t k = 0; k < i; ++k)
      if (inside(si.kept[k], p)) {
        e.a = std::max(e.a, j + 1);
        break;
      }
    for (std::size_t k = i + 1; k < si.kept.size(); ++k)
      if (inside(si.kept[k], p)) {
        e.b = std::min(e.b, j + 1);
        break;
      }
  }
  return e;
}

inline constexpr std::size_t kMaxSubsetRegions = 20;

// Minimum cover by subset enumeration in increasing size. Membership is taken
// on the raw coordinates; for disks centered on the line a reflected point has
// the same distance, so line-constrained input needs no normalization.
inline Solution brute_min_cover(const Instance& inst) {
  const std::size_t m = inst.regions.size();
  if (m > kMaxSubsetRegions)
    throw Error(ErrorCode::guard_exceeded,
                "subset enumeration is limited to " + std::to_string(kMaxSubsetRegions) + " regions, got " +
                    std::to_string(m));
  std::vector<std::uint32_t> masks;
  Solution sol;
  for (const Point& raw : inst.points) {
    Point p = raw;
    p.y -= inst.line_y;
    if (inst.variant == Variant::line_constrained && p.y < 0.0) p.y = -p.y;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m; ++i) {
      Region s = inst.regions[i];
      if (s.is_disk())
        s.cy -= inst.line_y;
      else
        s.intercept -= inst.line_y;
      if (inside(s, p)) mask |= 1u << i;
    }
    if (mask == 0 && (!sol.witness || raw.id < *sol.witness)) sol.witness = raw.id;
    masks.push_back(mask);
  }
  if (sol.witness) {
    sol.status = Status::infeasible;
    return sol;
  }
  auto covers = [&](std::uint32_t set) {
    return std::all_of(masks.begin(), masks.end(), [&](std::uint32_t mk) { return (mk & set) != 0; });
  };
  for (std::size_t k = 0; k <= m; ++k) {
    if (k == 0) {
      if (masks.empty()) return sol;
      continue;
    }
    // Gosper's hack over all k-subsets.
    std::uint32_t set = (1u << k) - 1;
    const std::uint32_t limit = 1u << m;
    while (set < limit) {
      if (covers(set)) {
        for (std::size_t i = 0; i < m; ++i)
          if (set >> i & 1u) sol.chosen.push_back(inst.regions[i].id);
        std::sort(sol.chosen.begin(), sol.chosen.end());
        return sol;
      }
      const std::uint32_t c = set & (~set + 1);
      const std::uint32_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  sol.status = Status::infeasible;
  return sol;
}

// True iff the chosen regions (input ids) cover every point. Chosen disks
// are bucketed by center x so large solutions verify quickly.
inline bool verify_cover(const Instance& inst, const std::vector<std::size_t>& chosen) {
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < inst.regions.size(); ++k) pos.emplace(inst.regions[k].id, k);
  std::vector<Region> disks;
  std::vector<Region> planes;
  double reach = 0.0;
  for (std::size_t id : chosen) {
    auto it = pos.find(id);
    if (it == pos.end()) throw Error(ErrorCode::unknown_id, "unknown region id " + std::to_string(id));
    Region t = inst.regions[it->second];
    if (t.is_disk()) {
      t.cy -= inst.line_y;
      reach = std::max(reach, t.radius);
      disks.push_back(t);
    } else {
      t.intercept -= inst.line_y;
      planes.push_back(t);
    }
  }
  std::sort(disks.begin(), disks.end(), [](const Region& a, const Region& b) { return a.cx < b.cx; });
  for (const Point& raw : inst.points) {
    Point p = raw;
    p.y -= inst.line_y;
    if (inst.variant == Variant::line_constrained && p.y < 0.0) p.y = -p.y;
    bool hit = std::any_of(planes.begin(), planes.end(), [&](const Region& t) { return inside(t, p); });
    auto it = std::lower_bound(disks.begin(), disks.end(), p.x - reach,
                               [](const Region& t, double x) { return t.cx < x; });
    for (; !hit && it != disks.end() && it->cx <= p.x + reach; ++it) hit = inside(*it, p);
    if (!hit) return false;
  }
  return true;
}

}  // namespace lsdc::oracle
