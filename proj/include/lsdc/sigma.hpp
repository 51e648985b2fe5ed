#pragma once

// Smallest and largest covering region index per point.
//
// A balanced tree over the sorted regions stores, at every node, the upper
// envelope of the axis and its regions' upper arcs. A point above the axis is
// inside some region of a node exactly when it is on or below that node's
// envelope, so each of the two indices is found by one root-to-leaf descent.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lsdc/cascade.hpp"
#include "lsdc/envelope.hpp"
#include "lsdc/instance.hpp"

namespace lsdc {

enum class SigmaBackend { binary, cascade };

// Sorted region indices (0-based) of the first and last region covering a
// point, or `first == kUncovered`.
struct SigmaEntry {
  static constexpr std::int32_t kUncovered = -1;
  std::int32_t first = kUncovered;
  std::int32_t last = kUncovered;

  bool covered() const { return first != kUncovered; }
  friend bool operator==(const SigmaEntry&, const SigmaEntry&) = default;
};

// One entry per point of SortedInstance::points (x-sorted order).
using SigmaTable = std::vector<SigmaEntry>;

class SigmaIndex {
 public:
  SigmaIndex() = default;

  SigmaIndex(std::span<const Region> regions, std::span<const Extent> extents,
             SigmaBackend backend = SigmaBackend::binary)
      : regions_(regions.begin(), regions.end()), backend_(backend) {
    const std::size_t m = regions_.size();
    if (m == 0) return;
    std::size_t slots = 1;
    while (slots < m) slots <<= 1;
    slots <<= 1;
    spans_.assign(slots, {});
    lo_.assign(slots, 0);
    hi_.assign(slots, 0);
    breaks_.reserve(4 * m);
    owners_.reserve(5 * m);
    Envelope scratch;
    build(1, 0, m, extents, scratch);
    if (backend_ == SigmaBackend::cascade) {
      cascade_.build(
          slots, [this](std::size_t v) { return view(v).breaks; },
          [this](std::size_t v) { return hi_[v] - lo_[v] == 1; });
    }
  }

  static SigmaIndex from(const SortedInstance& si, SigmaBackend backend = SigmaBackend::binary) {
    return SigmaIndex(si.kept, si.extents, backend);
  }

  std::size_t size() const { return regions_.size(); }
  SigmaBackend backend() const { return backend_; }
  std::span<const Region> regions() const { return regions_; }

  EnvelopeView view(std::size_t node) const {
    const Span& s = spans_[node];
    return {std::span<const double>(breaks_).subspan(s.break_offset, s.pieces - 1),
            std::span<const std::int32_t>(owners_).subspan(s.owner_offset, s.pieces)};
  }
  EnvelopeView root_envelope() const { return view(1); }

  // Node numbering: root 1, children 2v and 2v+1, covering [lo, hi).
  std::size_t node_lo(std::size_t v) const { return lo_[v]; }
  std::size_t node_hi(std::size_t v) const { return hi_[v]; }
  std::size_t node_slots() const { return spans_.size(); }

  SigmaEntry query(const Point& p) const {
    if (regions_.empty()) return {};
    return backend_ == SigmaBackend::cascade ? query_cascade(p) : query_binary(p);
  }

  SigmaTable query_all(std::span<const Point> points) const {
    SigmaTable out(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) out[k] = query(points[k]);
    return out;
  }

 private:
  struct Span {
    std::size_t break_offset = 0;
    std::size_t owner_offset = 0;
    std::size_t pieces = 1;
  };

  void build(std::size_t v, std::size_t lo, std::size_t hi, std::span<const Extent> extents, Envelope& scratch) {
    lo_[v] = lo;
    hi_[v] = hi;
    if (hi - lo == 1) {
      store(v, leaf_envelope(static_cast<std::int32_t>(lo), extents[lo]));
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    build(2 * v, lo, mid, extents, scratch);
    build(2 * v + 1, mid, hi, extents, scratch);
    merge_envelopes(regions_, view(2 * v), view(2 * v + 1), scratch);
    store(v, scratch);
  }

  void store(std::size_t v, const Envelope& env) {
    spans_[v] = {breaks_.size(), owners_.size(), env.owners.size()};
    breaks_.insert(breaks_.end(), env.breaks.begin(), env.breaks.end());
    owners_.insert(owners_.end(), env.owners.begin(), env.owners.end());
  }

  bool below(std::size_t v, std::size_t piece, const Point& p) const {
    return below_envelope(regions_, view(v), piece, p);
  }

  bool below_binary(std::size_t v, const Point& p) const {
    const EnvelopeView env = view(v);
    return below_envelope(regions_, env, env.piece_at(p.x), p);
  }

  SigmaEntry query_binary(const Point& p) const {
    if (!below_binary(1, p)) return {};
    SigmaEntry e;
    for (int side = 0; side < 2; ++side) {
      const bool want_last = side == 1;
      std::size_t v = 1;
      while (hi_[v] - lo_[v] > 1) {
        const std::size_t first_child = want_last ? 2 * v + 1 : 2 * v;
        const std::size_t other_child = want_last ? 2 * v : 2 * v + 1;
        v = below_binary(first_child, p) ? first_child : other_child;
      }
      (want_last ? e.last : e.first) = static_cast<std::int32_t>(lo_[v]);
    }
    return e;
  }

  SigmaEntry query_cascade(const Point& p) const {
    const std::uint32_t root_rank = cascade_.root_rank(p.x);
    if (!below(1, cascade_.own_rank(1, root_rank), p)) return {};
    SigmaEntry e;
    for (int side = 0; side < 2; ++side) {
      const bool want_last = side == 1;
      std::size_t v = 1;
      std::uint32_t rank = root_rank;
      while (hi_[v] - lo_[v] > 1) {
        const std::uint32_t probe_rank = cascade_.child_rank(v, rank, want_last, p.x);
        const std::size_t probe = 2 * v + (want_last ? 1 : 0);
        if (below(probe, cascade_.own_rank(probe, probe_rank), p)) {
          v = probe;
          rank = probe_rank;
        } else {
          rank = cascade_.child_rank(v, rank, !want_last, p.x);
          v = 2 * v + (want_last ? 0 : 1);
        }
      }
      (want_last ? e.last : e.first) = static_cast<std::int32_t>(lo_[v]);
    }
    return e;
  }

  std::vector<Region> regions_;
  SigmaBackend backend_ = SigmaBackend::binary;
  std::vector<Span> spans_;
  std::vector<std::size_t> lo_;
  std::vector<std::size_t> hi_;
  std::vector<double> breaks_;
  std::vector<std::int32_t> owners_;
  CascadeTree cascade_;
};

inline SigmaTable compute_sigma(const SortedInstance& si, SigmaBackend backend = SigmaBackend::binary) {
  return SigmaIndex::from(si, backend).query_all(si.points);
}

}  // namespace lsdc
