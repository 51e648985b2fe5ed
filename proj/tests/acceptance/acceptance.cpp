// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "test_support.hpp"

using namespace lsdc;
using namespace lsdc::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void a1_oracle_equivalence() {
  const auto t0 = Clock::now();
  std::size_t total = 0, agree = 0;
  for (Variant v : kGeneratedVariants)
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      const Instance inst = random_instance(v, 100000 + seed, 10, 12);
      ++total;
      const Solution got = solve(inst);
      const Solution want = oracle::brute_min_cover(inst);
      if (got.status == Status::optimal && want.status == Status::optimal && got.size() == want.size()) ++agree;
      else std::printf("  A1 %s seed %llu: solve %zu, oracle %zu\n", std::string(to_string(v)).c_str(),
                       static_cast<unsigned long long>(seed), got.size(), want.size());
    }
  const double secs = seconds_since(t0);
  report("A1", agree == total && secs < 300, fmt("%zu/%zu sizes match the oracle in %.2f s", agree, total, secs));
}

// The shared A2/A3 corpus: 200 instances over the three variants, n, m <= 500,
// every other one allowed to leave points uncovered.
std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (std::uint64_t k = 0; k < 200; ++k)
    out.push_back(random_instance(kGeneratedVariants[k % 3], 200000 + k, 500, 500, k % 2 == 0));
  return out;
}

void a2_sigma(const std::vector<Instance>& insts) {
  std::size_t checks = 0, agree = 0, uncovered = 0;
  for (const Instance& inst : insts) {
    const SortedInstance si = prune_contained(normalize(inst));
    const SigmaTable want = oracle::brute_sigma(si);
    for (const SigmaEntry& e : want) uncovered += !e.covered();
    for (SigmaBackend b : {SigmaBackend::binary, SigmaBackend::cascade}) {
      ++checks;
      agree += SigmaIndex(si.kept, si.extents, b).query_all(si.points) == want;
    }
  }
  report("A2", agree == checks, fmt("%zu/%zu sigma tables match the scan (%zu uncovered points seen)", agree, checks, uncovered));
}

void a3_prunable(const std::vector<Instance>& insts) {
  std::size_t checks = 0, agree = 0, found = 0;
  for (const Instance& inst : insts) {
    const SortedInstance full = prune_contained(normalize(inst));
    const auto [si, sig] = covered_only(full, oracle::brute_sigma(full));
    const std::vector<std::size_t> want = oracle::brute_prunable(si, sig);
    found += want.size();
    for (PruneBackend b : {resolve_backend(si.variant, {}), PruneBackend::naive}) {
      ++checks;
      agree += find_prunable(si, sig, b) == want;
    }
  }
  report("A3", agree == checks, fmt("%zu/%zu prunable sets match the scan (%zu prunable regions)", agree, checks, found));
}

std::size_t brute_1d(const OneDInstance& inst) {
  const std::size_t k = inst.segments.size();
  std::size_t best = k + 1;
  for (std::uint32_t set = 0; set < (1u << k); ++set) {
    bool ok = true;
    for (std::size_t j = 1; j <= inst.xs.size() && ok; ++j) {
      bool hit = false;
      for (std::size_t s = 0; s < k && !hit; ++s)
        hit = (set >> s & 1u) && inst.segments[s].first <= j && j <= inst.segments[s].last;
      ok = hit;
    }
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(set)));
  }
  return best;
}

void a4_invariants() {
  std::size_t monotone = 0, interior = 0, definition = 0, verified = 0, instances = 0;
  for (Variant v : kGeneratedVariants)
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      ++instances;
      const Instance inst = random_instance(v, 300000 + seed, 60, 60);
      const Trace t = trace(inst);
      bool ok = true;
      for (std::size_t i = 1; i < t.sorted.kept.size(); ++i)
        ok = ok && (v == Variant::lower_halfplane
                        ? t.sorted.kept[i - 1].slope < t.sorted.kept[i].slope
                        : t.sorted.extents[i - 1].lo < t.sorted.extents[i].lo &&
                              t.sorted.extents[i - 1].hi < t.sorted.extents[i].hi);
      monotone += ok;
      ok = true;
      for (const ABEntry& e : t.ab)
        for (std::size_t j = e.a + 1; j < e.b; ++j) ok = ok && point_in_region(t.sorted.kept[e.index], t.sorted.points[j - 1]);
      interior += ok;
      ok = true;
      for (const ABEntry& e : t.ab) ok = ok && e == oracle::brute_ab(t.sorted, e.index);
      definition += ok;
      verified += t.solution.status == Status::optimal && oracle::verify_cover(inst, t.solution.chosen);
    }

  std::mt19937_64 rng(4);
  std::size_t greedy_ok = 0;
  const std::size_t greedy_trials = 2000;
  for (std::size_t trial = 0; trial < greedy_trials; ++trial) {
    OneDInstance inst;
    const std::size_t n = 1 + rng() % 15;
    const std::size_t k = 1 + rng() % 12;
    for (std::size_t j = 0; j < n; ++j) {
      inst.xs.push_back(static_cast<double>(j));
      inst.point_ids.push_back(j);
    }
    for (std::size_t s = 0; s < k; ++s) {
      Segment1D seg;
      seg.first = 1 + rng() % n;
      seg.last = seg.first + rng() % (n - seg.first + 1);
      seg.lo = inst.xs[seg.first - 1];
      seg.hi = inst.xs[seg.last - 1];
      seg.owner = seg.id = s;
      inst.segments.push_back(seg);
    }
    std::stable_sort(inst.segments.begin(), inst.segments.end(),
                     [](const Segment1D& a, const Segment1D& b) { return a.first < b.first; });
    const std::size_t want = brute_1d(inst);
    if (want > k) {
      try {
        greedy_cover_1d(inst);
      } catch (const std::logic_error&) {
        ++greedy_ok;
      }
    } else {
      greedy_ok += greedy_cover_1d(inst).size() == want;
    }
  }

  const bool ok = monotone == instances && interior == instances && definition == instances && verified == instances &&
                  greedy_ok == greedy_trials;
  report("A4", ok,
         fmt("monotone %zu/%zu, interior %zu/%zu, definition %zu/%zu, verify %zu/%zu, greedy %zu/%zu", monotone,
             instances, interior, instances, definition, instances, verified, instances, greedy_ok, greedy_trials));
}

void a5_scaling() {
  BenchSpec spec;
  spec.variant = Variant::unit_disk;
  spec.sizes = {1u << 16, 1u << 17, 1u << 18, 1u << 19};
  spec.reps = 5;
  spec.seed = 500000;
  spec.sigma = {SigmaBackend::cascade};
  spec.prune = {PruneBackend::cap};
  const auto t0 = Clock::now();
  const std::vector<BenchRecord> rows = run_bench(spec);
  const double secs = seconds_since(t0);
  std::vector<double> totals;
  for (const BenchRecord& r : rows)
    if (r.stage == "total") totals.push_back(r.millis);
  bool ok = totals.size() == spec.sizes.size() && secs < 600;
  std::string detail = "median ms";
  for (double t : totals) detail += fmt(" %.0f", t);
  detail += ", ratios";
  for (std::size_t k = 1; k < totals.size(); ++k) {
    const double ratio = totals[k] / totals[k - 1];
    ok = ok && ratio <= 2.6;
    detail += fmt(" %.2f", ratio);
  }
  report("A5", ok, detail + fmt(", ladder %.0f s", secs));
}

void a6_reflection() {
  std::mt19937_64 rng(6);
  std::size_t same = 0, reflected = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Instance inst = random_instance(Variant::line_constrained, 600000 + seed, 300, 200);
    const std::size_t before = solve(inst).size();
    for (Point& p : inst.points)
      if (rng() % 2) {
        p.y = 2 * inst.line_y - p.y;
        ++reflected;
      }
    same += solve(inst).size() == before;
  }
  report("A6", same == 100, fmt("%zu/100 sizes unchanged after reflecting %zu points", same, reflected));
}

// A point above everything at the x of an existing point; y doubles until no
// region holds it.
Point unreachable_point(const Instance& inst, std::mt19937_64& rng) {
  std::vector<std::size_t> all;
  for (const Region& s : inst.regions) all.push_back(s.id);
  const double x = inst.points[rng() % inst.points.size()].x;
  for (double h = 1;; h *= 2) {
    Instance probe = inst;
    probe.points = {{x, inst.line_y + h, 0}};
    if (!oracle::verify_cover(probe, all)) return probe.points[0];
  }
}

void a7_infeasible() {
  std::mt19937_64 rng(7);
  std::size_t correct = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Instance inst = random_instance(kGeneratedVariants[k % 3], 700000 + k, 100, 60);
    const std::size_t at = rng() % (inst.points.size() + 1);
    inst.points.insert(inst.points.begin() + static_cast<std::ptrdiff_t>(at), unreachable_point(inst, rng));
    for (std::size_t j = 0; j < inst.points.size(); ++j) inst.points[j].id = j;
    const Solution s = solve(inst);
    correct += s.status == Status::infeasible && s.witness == std::optional<std::size_t>(at) && s.chosen.empty();
  }
  report("A7", correct == 100, fmt("%zu/100 infeasible with the planted witness", correct));
}

}  // namespace

int main() {
  a1_oracle_equivalence();
  const std::vector<Instance> insts = corpus();
  a2_sigma(insts);
  a3_prunable(insts);
  a4_invariants();
  a5_scaling();
  a6_reflection();
  a7_infeasible();
  return failures == 0 ? 0 : 1;
}
