#pragma once

// Detection of prunable regions.
//
// Region i is prunable when some point outside it has a covering interval
// [first, last] that contains i. The intervals are stored in a segment tree
// over the sorted regions, so the points whose interval contains i are the
// union of the canonical sets on the root-to-leaf path of i. Each node keeps
// a structure that decides "is every canonical point inside region s" in
// logarithmic time.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lsdc/cap_chain.hpp"
#include "lsdc/farthest.hpp"
#include "lsdc/instance.hpp"
#include "lsdc/sigma.hpp"

namespace lsdc {

enum class PruneBackend { fvd, cap, dual, naive };

inline std::string_view to_string(PruneBackend b) {
  switch (b) {
    case PruneBackend::fvd: return "fvd";
    case PruneBackend::cap: return "cap";
    case PruneBackend::dual: return "dual";
    case PruneBackend::naive: return "naive";
  }
  return "?";
}

inline std::optional<PruneBackend> parse_prune_backend(std::string_view s) {
  for (PruneBackend b : {PruneBackend::fvd, PruneBackend::cap, PruneBackend::dual, PruneBackend::naive})
    if (to_string(b) == s) return b;
  return std::nullopt;
}

// Throws backend_mismatch when `mode` cannot handle the regions.
inline void check_backend(std::span<const Region> regions, PruneBackend mode) {
  auto fail = [](const char* why) { throw Error(ErrorCode::backend_mismatch, why); };
  for (const Region& s : regions) {
    if (mode == PruneBackend::dual && s.is_disk()) fail("dual backend needs lower half-planes");
    if ((mode == PruneBackend::fvd || mode == PruneBackend::cap) && !s.is_disk()) fail("fvd and cap backends need disks");
    if (mode == PruneBackend::cap && s.radius != regions.front().radius) fail("cap backend needs congruent disks");
  }
}

inline Box center_box(std::span<const Region> regions) {
  Box b{kInf, kInf, -kInf, -kInf};
  for (const Region& s : regions) {
    b.x0 = std::min(b.x0, s.cx);
    b.y0 = std::min(b.y0, s.cy);
    b.x1 = std::max(b.x1, s.cx);
    b.y1 = std::max(b.y1, s.cy);
  }
  if (regions.empty()) b = {0.0, 0.0, 0.0, 0.0};
  return {b.x0 - 1.0, b.y0 - 1.0, b.x1 + 1.0, b.y1 + 1.0};
}

class PruneIndex {
  static constexpr std::uint32_t kNoStructure = 0xffffffffu;

 public:
  PruneIndex(const SortedInstance& si, const SigmaTable& sig, PruneBackend mode)
      : regions_(si.kept), points_(si.points), mode_(mode) {
    if (sig.size() != si.points.size()) throw std::invalid_argument("sigma table does not match the points");
    for (const SigmaEntry& e : sig)
      if (!e.covered()) throw std::invalid_argument("prune index needs every point covered");
    check_backend(regions_, mode_);
    const std::size_t m = regions_.size();
    if (m == 0) return;
    std::size_t slots = 1;
    while (slots < m) slots <<= 1;
    slots <<= 1;
    lo_.assign(slots, 0);
    hi_.assign(slots, 0);
    offset_.assign(slots + 1, 0);
    set_range(1, 0, m);

    // Two passes over the points in x-order keep every canonical list sorted.
    std::vector<std::uint32_t> fill(slots, 0);
    for (const SigmaEntry& e : sig)
      decompose(1, static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.last),
                [&](std::size_t v) { ++fill[v]; });
    for (std::size_t v = 0; v < slots; ++v) offset_[v + 1] = offset_[v] + fill[v];
    members_.resize(offset_[slots]);
    std::fill(fill.begin(), fill.end(), 0);
    for (std::uint32_t j = 0; j < sig.size(); ++j)
      decompose(1, static_cast<std::size_t>(sig[j].first), static_cast<std::size_t>(sig[j].last),
                [&](std::size_t v) { members_[offset_[v] + fill[v]++] = j; });

    slot_.assign(slots, kNoStructure);
    const Box box = mode_ == PruneBackend::fvd ? center_box(regions_) : Box{};
    std::vector<Point> pts;
    for (std::size_t v = 1; v < slots; ++v) {
      if (offset_[v] == offset_[v + 1] || mode_ == PruneBackend::naive) continue;
      pts.clear();
      for (std::uint32_t j : canonical(v)) pts.push_back(points_[j]);
      if (mode_ == PruneBackend::fvd) {
        slot_[v] = static_cast<std::uint32_t>(fvd_.size());
        fvd_.emplace_back(pts, box);
      } else if (mode_ == PruneBackend::cap) {
        slot_[v] = static_cast<std::uint32_t>(cap_.size());
        cap_.emplace_back(pts, regions_.front().radius);
      } else {
        slot_[v] = static_cast<std::uint32_t>(dual_.size());
        dual_.emplace_back(pts);
      }
    }
  }

  PruneBackend backend() const { return mode_; }
  std::size_t node_slots() const { return lo_.size(); }
  std::size_t node_lo(std::size_t v) const { return lo_[v]; }
  std::size_t node_hi(std::size_t v) const { return hi_[v]; }

  // Positions (in x-order) of the points stored at node v.
  std::span<const std::uint32_t> canonical(std::size_t v) const {
    return std::span<const std::uint32_t>(members_).subspan(offset_[v], offset_[v + 1] - offset_[v]);
  }

  // Nodes on the path from the root to the leaf of sorted index i.
  std::vector<std::size_t> path(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 1;; v = i < lo_[2 * v + 1] ? 2 * v : 2 * v + 1) {
      out.push_back(v);
      if (hi_[v] - lo_[v] == 1) break;
    }
    return out;
  }

  bool prunable(std::size_t i) const {
    const Region& s = regions_[i];
    for (std::size_t v = 1;; v = i < lo_[2 * v + 1] ? 2 * v : 2 * v + 1) {
      if (offset_[v] != offset_[v + 1] && has_witness(v, s)) return true;
      if (hi_[v] - lo_[v] == 1) return false;
    }
  }

  // Sorted indices of all prunable regions, ascending.
  std::vector<std::size_t> find_all() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < regions_.size(); ++i)
      if (prunable(i)) out.push_back(i);
    return out;
  }

 private:
  void set_range(std::size_t v, std::size_t lo, std::size_t hi) {
    lo_[v] = lo;
    hi_[v] = hi;
    if (hi - lo == 1) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    set_range(2 * v, lo, mid);
    set_range(2 * v + 1, mid, hi);
  }

  // Canonical nodes of the closed index range [a, b].
  template <class Fn>
  void decompose(std::size_t v, std::size_t a, std::size_t b, Fn&& fn) const {
    if (b < lo_[v] || a >= hi_[v]) return;
    if (a <= lo_[v] && hi_[v] - 1 <= b) {
      fn(v);
      return;
    }
    decompose(2 * v, a, b, fn);
    decompose(2 * v + 1, a, b, fn);
  }

  bool has_witness(std::size_t v, const Region& s) const {
    switch (mode_) {
      case PruneBackend::fvd: {
        const Point c{s.cx, s.cy, 0};
        return !point_in_region(s, fvd_[slot_[v]].farthest_point(c));
      }
      case PruneBackend::cap:
        return !cap_[slot_[v]].contains({s.cx, s.cy, 0});
      case PruneBackend::dual:
        return !dual_[slot_[v]].covered_by(s);
      case PruneBackend::naive:
        for (std::uint32_t j : canonical(v))
          if (!point_in_region(s, points_[j])) return true;
        return false;
    }
    return false;
  }

  std::vector<Region> regions_;
  std::vector<Point> points_;
  PruneBackend mode_;
  std::vector<std::size_t> lo_;
  std::vector<std::size_t> hi_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> slot_;  // node -> index into the backend's vector
  std::vector<FarthestStruct> fvd_;
  std::vector<CapChain> cap_;
  std::vector<DualEnvelope> dual_;
};

inline std::vector<std::size_t> find_prunable(const SortedInstance& si, const SigmaTable& sig, PruneBackend mode) {
  return PruneIndex(si, sig, mode).find_all();
}

}  // namespace lsdc
