#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsdc/generate.hpp"
#include "lsdc/solve.hpp"

namespace lsdc {

struct BenchSpec {
  Variant variant = Variant::unit_disk;
  std::vector<std::size_t> sizes;  // n = m = N for each entry
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  std::vector<SigmaBackend> sigma = {SigmaBackend::cascade};
  std::vector<PruneBackend> prune = {PruneBackend::cap};
};

struct BenchRecord {
  Variant variant = Variant::unit_disk;
  std::size_t n = 0;
  std::size_t m = 0;
  SigmaBackend sigma = SigmaBackend::binary;
  PruneBackend prune = PruneBackend::naive;
  std::string stage;
  double millis = 0.0;  // median over the repetitions
  std::size_t size = 0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kBenchHeader = "variant,n,m,sigma,prune,stage,millis,size,seed";

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2.0;
}

// One instance per size (seeded by seed + size index); every backend pair
// solves it `reps` times. Rows come out per size, per backend pair, per stage.
inline std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  std::vector<BenchRecord> rows;
  for (std::size_t k = 0; k < spec.sizes.size(); ++k) {
    GenParams gp;
    gp.variant = spec.variant;
    gp.n = gp.m = spec.sizes[k];
    gp.seed = spec.seed + k;
    const Instance inst = gen_instance(gp);
    for (SigmaBackend sb : spec.sigma)
      for (PruneBackend pb : spec.prune) {
        SolveOptions opt;
        opt.sigma = sb;
        opt.prune = pb;
        std::vector<std::string> order;
        std::map<std::string, std::vector<double>> times;
        std::size_t size = 0;
        for (std::size_t r = 0; r < std::max<std::size_t>(1, spec.reps); ++r) {
          const Trace t = trace(inst, opt);
          size = t.solution.size();
          for (const StageTime& st : t.times) {
            if (!times.count(st.stage)) order.push_back(st.stage);
            times[st.stage].push_back(st.millis);
          }
        }
        for (const std::string& stage : order)
          rows.push_back({spec.variant, gp.n, gp.m, sb, pb, stage, median(times[stage]), size, gp.seed});
      }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRecord>& rows) {
  std::string out = std::string(kBenchHeader) + "\n";
  char buf[64];
  for (const BenchRecord& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.millis);
    out += std::string(to_string(r.variant)) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::string(to_string(r.sigma)) + "," + std::string(to_string(r.prune)) + "," + r.stage + "," + buf + "," +
           std::to_string(r.size) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

}  // namespace lsdc
