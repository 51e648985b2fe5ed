#pragma once

// From surviving regions to a one-dimensional covering problem.
//
// Point ranks are 1-based positions in x-order. For a surviving region i,
// a(i) is the largest rank covered only by regions left of i and b(i) the
// smallest rank covered only by regions right of i (sentinels 0 and n+1).
// Every rank strictly between them lies inside region i, so the region turns
// into the rank interval [a(i)+1, b(i)-1].

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsdc/geom.hpp"
#include "lsdc/sigma.hpp"

namespace lsdc {

struct ABEntry {
  std::size_t index = 0;  // sorted region index
  std::size_t a = 0;
  std::size_t b = 0;

  friend bool operator==(const ABEntry&, const ABEntry&) = default;
};

// One entry per survivor, in the order the survivors were given.
using ABTable = std::vector<ABEntry>;

// `sig` is in x-order and fully covered; `m` is the number of sorted regions.
inline ABTable compute_ab(const SigmaTable& sig, std::size_t m, std::span<const std::size_t> survivors) {
  const std::size_t n = sig.size();
  // last_rank[k]: largest rank whose last covering index is k; first_rank likewise.
  std::vector<std::size_t> last_rank(m, 0);
  std::vector<std::size_t> first_rank(m, n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const auto l = static_cast<std::size_t>(sig[j].last);
    const auto f = static_cast<std::size_t>(sig[j].first);
    last_rank[l] = std::max(last_rank[l], j + 1);
    first_rank[f] = std::min(first_rank[f], j + 1);
  }
  // before[i] = max over k < i; after[i] = min over k > i.
  std::vector<std::size_t> before(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) before[k + 1] = std::max(before[k], last_rank[k]);
  std::vector<std::size_t> after(m + 1, n + 1);
  for (std::size_t k = m; k-- > 0;) after[k] = std::min(after[k + 1], first_rank[k]);

  ABTable out;
  out.reserve(survivors.size());
  for (std::size_t i : survivors) out.push_back({i, before[i], i + 1 < m ? after[i + 1] : n + 1});
  return out;
}

struct Segment1D {
  std::size_t first = 0;  // rank range, inclusive
  std::size_t last = 0;
  double lo = 0.0;  // abscissas of the end ranks
  double hi = 0.0;
  std::size_t owner = 0;  // sorted region index
  std::size_t id = 0;     // input id of the owner
};

struct OneDInstance {
  std::vector<double> xs;               // projected points in x-order
  std::vector<std::size_t> point_ids;   // parallel to xs
  std::vector<Segment1D> segments;      // sorted by first rank
};

// Survivors with an empty rank range cover nothing that matters and are
// dropped. `orig_of` maps sorted indices to input ids.
inline OneDInstance build_segments(const ABTable& ab, std::span<const Point> points,
                                   std::span<const std::size_t> orig_of) {
  OneDInstance out;
  out.xs.reserve(points.size());
  for (const Point& p : points) {
    out.xs.push_back(p.x);
    out.point_ids.push_back(p.id);
  }
  for (const ABEntry& e : ab) {
    if (e.a + 1 > e.b - 1 || e.b == 0) continue;
    Segment1D s;
    s.first = e.a + 1;
    s.last = e.b - 1;
    s.lo = points[s.first - 1].x;
    s.hi = points[s.last - 1].x;
    s.owner = e.index;
    s.id = orig_of[e.index];
    out.segments.push_back(s);
  }
  std::stable_sort(out.segments.begin(), out.segments.end(),
                   [](const Segment1D& a, const Segment1D& b) { return a.first < b.first; });
  return out;
}

// Minimum number of segments covering every rank. Returns positions into
// inst.segments in the order they were picked.
inline std::vector<std::size_t> greedy_cover_1d(const OneDInstance& inst) {
  std::vector<std::size_t> chosen;
  const std::size_t n = inst.xs.size();
  const auto& segs = inst.segments;
  std::size_t next = 0;
  std::size_t reach = 0;
  std::size_t best = segs.size();
  auto better = [&](std::size_t c) {
    if (best == segs.size()) return true;
    if (segs[c].last != segs[best].last) return segs[c].last > segs[best].last;
    return segs[c].id < segs[best].id;
  };
  for (std::size_t j = 1; j <= n; ++j) {
    if (j <= reach) continue;
    for (; next < segs.size() && segs[next].first <= j; ++next)
      if (better(next)) best = next;
    if (best == segs.size() || segs[best].last < j)
      throw std::logic_error("rank " + std::to_string(j) + " is covered by no segment");
    chosen.push_back(best);
    reach = segs[best].last;
  }
  return chosen;
}

}  // namespace lsdc
