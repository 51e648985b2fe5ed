#pragma once

// Upper envelopes of the x-axis and a set of region boundaries.
//
// An envelope is stored as ascending breakpoints b[0..k) and k+1 piece owners:
// owner[0] spans (-inf, b[0]], owner[j] spans [b[j-1], b[j]], owner[k] spans
// [b[k-1], +inf). An owner is a sorted region index, or kLineOwner where the
// axis itself is on top.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lsdc/geom.hpp"

namespace lsdc {

inline constexpr std::int32_t kLineOwner = -1;

struct EnvelopeView {
  std::span<const double> breaks;
  std::span<const std::int32_t> owners;

  std::size_t pieces() const { return owners.size(); }

  // Piece holding x; ties at a breakpoint go right.
  std::size_t piece_at(double x) const {
    return static_cast<std::size_t>(std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin());
  }
};

struct Envelope {
  std::vector<double> breaks;
  std::vector<std::int32_t> owners;

  EnvelopeView view() const { return {breaks, owners}; }
  std::size_t pieces() const { return owners.size(); }
};

inline Envelope leaf_envelope(std::int32_t owner, const Extent& e) {
  Envelope env;
  if (e.empty()) {
    env.owners = {kLineOwner};
    return env;
  }
  if (e.lo > -kInf) {
    env.owners.push_back(kLineOwner);
    env.breaks.push_back(e.lo);
  }
  env.owners.push_back(owner);
  if (e.hi < kInf) {
    env.breaks.push_back(e.hi);
    env.owners.push_back(kLineOwner);
  }
  return env;
}

namespace detail {

// A point strictly inside (lo, hi); used to decide which of two boundaries
// that do not cross in the interval is on top.
inline double representative(double lo, double hi) {
  if (lo == -kInf && hi == kInf) return 0.0;
  if (lo == -kInf) return hi - std::max(1.0, std::fabs(hi));
  if (hi == kInf) return lo + std::max(1.0, std::fabs(lo));
  return lo + (hi - lo) / 2.0;
}

class EnvelopeWriter {
 public:
  explicit EnvelopeWriter(Envelope& out) : out_(out) {
    out_.breaks.clear();
    out_.owners.clear();
  }

  void push(double start, std::int32_t owner) {
    if (!out_.owners.empty() && out_.owners.back() == owner) return;
    if (!out_.owners.empty()) out_.breaks.push_back(start);
    out_.owners.push_back(owner);
  }

 private:
  Envelope& out_;
};

inline std::int32_t higher(std::span<const Region> regions, std::int32_t a, std::int32_t b, double x) {
  const double ya = upper_boundary_y(regions[a], x).value_or(-1.0);
  const double yb = upper_boundary_y(regions[b], x).value_or(-1.0);
  if (ya != yb) return ya > yb ? a : b;
  return std::min(a, b);
}

}  // namespace detail

// Pointwise maximum of two envelopes over the same region list, by a sweep
// over the merged breakpoints. Inside one elementary interval both inputs
// have a single owner; two regions may swap order only at their crossings.
inline void merge_envelopes(std::span<const Region> regions, EnvelopeView a, EnvelopeView b, Envelope& out) {
  detail::EnvelopeWriter w(out);
  std::size_t i = 0;
  std::size_t j = 0;
  double lo = -kInf;
  for (;;) {
    const double hi_a = i < a.breaks.size() ? a.breaks[i] : kInf;
    const double hi_b = j < b.breaks.size() ? b.breaks[j] : kInf;
    const double hi = std::min(hi_a, hi_b);
    if (hi > lo) {
      const std::int32_t oa = a.owners[i];
      const std::int32_t ob = b.owners[j];
      if (oa == kLineOwner || ob == kLineOwner || oa == ob) {
        w.push(lo, oa == kLineOwner ? ob : oa);
      } else {
        const Crossings c = upper_crossings(regions[oa], regions[ob]);
        double start = lo;
        for (std::size_t k = 0; k < c.count; ++k) {
          if (!(c.x[k] > start && c.x[k] < hi)) continue;
          w.push(start, detail::higher(regions, oa, ob, detail::representative(start, c.x[k])));
          start = c.x[k];
        }
        w.push(start, detail::higher(regions, oa, ob, detail::representative(start, hi)));
      }
    }
    if (hi == kInf) break;
    if (hi_a == hi) ++i;
    if (hi_b == hi) ++j;
    lo = hi;
  }
}

inline Envelope merge_envelopes(std::span<const Region> regions, EnvelopeView a, EnvelopeView b) {
  Envelope out;
  merge_envelopes(regions, a, b, out);
  return out;
}

// Closed "on or below the envelope" test for a point above the axis, given the
// piece that holds p.x. Neighbouring pieces are also consulted so that a point
// sitting on a breakpoint, or within rounding of one, sees both owners.
inline bool below_envelope(std::span<const Region> regions, EnvelopeView env, std::size_t piece, const Point& p) {
  const std::size_t first = piece == 0 ? 0 : piece - 1;
  const std::size_t last = std::min(piece + 1, env.owners.size() - 1);
  for (std::size_t k = first; k <= last; ++k) {
    const std::int32_t o = env.owners[k];
    if (o != kLineOwner && point_in_region(regions[o], p)) return true;
  }
  // Zero-width pieces from repeated breakpoints.
  for (std::size_t k = first; k > 0 && env.breaks[k - 1] == p.x; --k) {
    const std::int32_t o = env.owners[k - 1];
    if (o != kLineOwner && point_in_region(regions[o], p)) return true;
  }
  return false;
}

// Height of the envelope at x (0 where the axis is on top).
inline double envelope_height(std::span<const Region> regions, EnvelopeView env, double x) {
  const std::int32_t o = env.owners[env.piece_at(x)];
  if (o == kLineOwner) return 0.0;
  return upper_boundary_y(regions[o], x).value_or(0.0);
}

}  // namespace lsdc
