#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsdc/instance.hpp"
#include "lsdc/prune.hpp"
#include "lsdc/reduce.hpp"
#include "lsdc/sigma.hpp"

namespace lsdc {

enum class Algo { automatic, general, unit, halfplane, oracle };

inline std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::automatic: return "auto";
    case Algo::general: return "general";
    case Algo::unit: return "unit";
    case Algo::halfplane: return "halfplane";
    case Algo::oracle: return "oracle";
  }
  return "?";
}

inline std::optional<Algo> parse_algo(std::string_view s) {
  for (Algo a : {Algo::automatic, Algo::general, Algo::unit, Algo::halfplane, Algo::oracle})
    if (to_string(a) == s) return a;
  return std::nullopt;
}

inline std::string_view to_string(SigmaBackend b) { return b == SigmaBackend::cascade ? "cascade" : "binary"; }

inline std::optional<SigmaBackend> parse_sigma_backend(std::string_view s) {
  if (s == "binary") return SigmaBackend::binary;
  if (s == "cascade") return SigmaBackend::cascade;
  return std::nullopt;
}

struct SolveOptions {
  Algo algo = Algo::automatic;
  SigmaBackend sigma = SigmaBackend::binary;
  std::optional<PruneBackend> prune;  // overrides the algo's choice
};

// Prune backend implied by the options and the variant.
inline PruneBackend resolve_backend(Variant v, const SolveOptions& opt) {
  if (opt.prune) return *opt.prune;
  switch (opt.algo) {
    case Algo::general: return PruneBackend::fvd;
    case Algo::unit: return PruneBackend::cap;
    case Algo::halfplane: return PruneBackend::dual;
    case Algo::oracle: throw Error(ErrorCode::backend_mismatch, "the oracle is not a pipeline backend");
    case Algo::automatic: break;
  }
  if (v == Variant::unit_disk) return PruneBackend::cap;
  if (v == Variant::lower_halfplane) return PruneBackend::dual;
  return PruneBackend::fvd;
}

enum class Status { optimal, infeasible };

inline std::string_view to_string(Status s) { return s == Status::optimal ? "optimal" : "infeasible"; }

struct Solution {
  Status status = Status::optimal;
  std::vector<std::size_t> chosen;  // input ids, ascending
  std::optional<std::size_t> witness;

  std::size_t size() const { return chosen.size(); }
};

struct StageTime {
  std::string stage;
  double millis = 0.0;
};

// Every intermediate of one pipeline run.
struct Trace {
  Instance normalized;
  SortedInstance sorted;
  SigmaTable sigma;
  PruneBackend backend = PruneBackend::naive;
  std::vector<std::size_t> prunable;   // sorted indices
  std::vector<std::size_t> survivors;  // sorted indices
  ABTable ab;
  OneDInstance oned;
  std::vector<std::size_t> picked;     // positions in oned.segments
  Solution solution;
  std::vector<StageTime> times;
};

namespace detail {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTime>& out) : out_(out), start_(now()), last_(start_) {}

  void lap(const char* stage) {
    const auto t = now();
    out_.push_back({stage, ms(last_, t)});
    last_ = t;
  }
  void total() { out_.push_back({"total", ms(start_, now())}); }

 private:
  using clock = std::chrono::steady_clock;
  static clock::time_point now() { return clock::now(); }
  static double ms(clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  }
  std::vector<StageTime>& out_;
  clock::time_point start_;
  clock::time_point last_;
};

}  // namespace detail

inline Trace trace(const Instance& raw, const SolveOptions& opt = {}) {
  Trace t;
  detail::StageClock clock(t.times);
  t.normalized = normalize(raw);
  const ValidationReport report = validate(t.normalized);
  if (!report.ok()) throw Error(ErrorCode::family_violation, report.violations.front());
  t.backend = resolve_backend(raw.variant, opt);
  check_backend(t.normalized.regions, t.backend);
  clock.lap("normalize");

  t.sorted = prune_contained(t.normalized);
  clock.lap("contain");

  t.sigma = SigmaIndex::from(t.sorted, opt.sigma).query_all(t.sorted.points);
  clock.lap("sigma");

  for (std::size_t j = 0; j < t.sigma.size(); ++j) {
    if (t.sigma[j].covered()) continue;
    const std::size_t id = t.sorted.points[j].id;
    if (!t.solution.witness || id < *t.solution.witness) t.solution.witness = id;
  }
  if (t.solution.witness) {
    t.solution.status = Status::infeasible;
    clock.total();
    return t;
  }

  t.prunable = find_prunable(t.sorted, t.sigma, t.backend);
  clock.lap("prune");

  std::size_t next = 0;
  for (std::size_t i = 0; i < t.sorted.kept.size(); ++i) {
    if (next < t.prunable.size() && t.prunable[next] == i) {
      ++next;
      continue;
    }
    t.survivors.push_back(i);
  }
  t.ab = compute_ab(t.sigma, t.sorted.kept.size(), t.survivors);
  t.oned = build_segments(t.ab, t.sorted.points, t.sorted.orig_of);
  clock.lap("reduce");

  t.picked = greedy_cover_1d(t.oned);
  for (std::size_t k : t.picked) t.solution.chosen.push_back(t.oned.segments[k].id);
  std::sort(t.solution.chosen.begin(), t.solution.chosen.end());
  clock.lap("greedy");
  clock.total();
  return t;
}

inline Solution solve(const Instance& raw, const SolveOptions& opt = {}) { return trace(raw, opt).solution; }

}  // namespace lsdc
