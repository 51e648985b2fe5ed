#include <gtest/gtest.h>

#include "lsdc/generate.hpp"
#include "lsdc/io.hpp"
#include "lsdc/oracle.hpp"
#include "test_support.hpp"

using namespace lsdc;
using namespace lsdc::testing;

TEST(BruteSigma, Examples) {
  const SortedInstance e1 = prune_contained(normalize(row_of_three()));
  EXPECT_EQ(oracle::brute_sigma(e1), (SigmaTable{{0, 0}, {1, 1}, {2, 2}}));
  const SortedInstance one =
      prune_contained(normalize(make_disks(Variant::unit_disk, {{0, 0.1}, {0.2, 0.3}}, {{{0, 0, 5}}})));
  EXPECT_EQ(oracle::brute_sigma(one), (SigmaTable{{0, 0}, {0, 0}}));
  const SortedInstance miss = prune_contained(normalize(make_disks(Variant::unit_disk, {{9, 0.1}}, {{{0, 0, 1}}})));
  EXPECT_FALSE(oracle::brute_sigma(miss)[0].covered());
}

TEST(BrutePrunable, Examples) {
  const SortedInstance e2 = prune_contained(normalize(shared_middle()));
  EXPECT_EQ(oracle::brute_prunable(e2, oracle::brute_sigma(e2)), std::vector<std::size_t>{1});
  const SortedInstance e1 = prune_contained(normalize(row_of_three()));
  EXPECT_TRUE(oracle::brute_prunable(e1, oracle::brute_sigma(e1)).empty());
  const SortedInstance one = prune_contained(normalize(make_disks(Variant::unit_disk, {{0, 0.1}}, {{{0, 0, 1}}})));
  EXPECT_TRUE(oracle::brute_prunable(one, oracle::brute_sigma(one)).empty());
}

TEST(BruteMinCover, Examples) {
  EXPECT_EQ(oracle::brute_min_cover(row_of_three()).size(), 3u);
  EXPECT_EQ(oracle::brute_min_cover(shared_middle()).size(), 2u);
  const Solution empty = oracle::brute_min_cover(make_disks(Variant::unit_disk, {}, {{{0, 0, 1}}}));
  EXPECT_EQ(empty.status, Status::optimal);
  EXPECT_TRUE(empty.chosen.empty());
}

TEST(BruteMinCover, GuardAndInfeasible) {
  GenParams gp;
  gp.m = 21;
  gp.n = 3;
  try {
    oracle::brute_min_cover(gen_instance(gp));
    ADD_FAILURE() << "guard not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::guard_exceeded);
  }
  Instance far = row_of_three();
  far.points.push_back({50, 1, 3});
  const Solution s = oracle::brute_min_cover(far);
  EXPECT_EQ(s.status, Status::infeasible);
  EXPECT_EQ(s.witness, std::optional<std::size_t>(3));
}

TEST(BruteMinCover, MonotoneWhenAddingRegions) {
  for (Variant v : kGeneratedVariants)
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      Instance inst = random_instance(v, 700 + seed, 10, 10);
      const std::size_t before = oracle::brute_min_cover(inst).size();
      Instance extra = random_instance(v, 900 + seed, 1, 3, false);
      for (Region s : extra.regions) {
        if (v == Variant::unit_disk) s.radius = inst.regions.front().radius;
        s.id = inst.regions.size();
        inst.regions.push_back(s);
      }
      EXPECT_LE(oracle::brute_min_cover(inst).size(), before);
    }
}

TEST(VerifyCover, Examples) {
  EXPECT_TRUE(oracle::verify_cover(shared_middle(), {0, 2}));
  EXPECT_FALSE(oracle::verify_cover(shared_middle(), {1}));
  EXPECT_TRUE(oracle::verify_cover(make_disks(Variant::unit_disk, {}, {}), {}));
  try {
    oracle::verify_cover(shared_middle(), {7});
    ADD_FAILURE() << "unknown id accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_id);
  }
}

TEST(VerifyCover, HandlesShiftedLineAndReflection) {
  Instance inst = make_disks(Variant::line_constrained, {{0, 3}, {0, -1}}, {{{0, 1, 2.5}}}, 1.0);
  EXPECT_TRUE(oracle::verify_cover(inst, {0}));
  inst.points.push_back({0, 4, 2});
  EXPECT_FALSE(oracle::verify_cover(inst, {0}));
}

TEST(GenInstance, DeterministicInSeed) {
  for (Variant v : kGeneratedVariants) {
    GenParams gp;
    gp.variant = v;
    gp.n = 50;
    gp.m = 30;
    gp.seed = 77;
    EXPECT_EQ(instance_to_json(gen_instance(gp)).dump(), instance_to_json(gen_instance(gp)).dump());
    gp.seed = 78;
    const std::string other = instance_to_json(gen_instance(gp)).dump();
    gp.seed = 77;
    EXPECT_NE(instance_to_json(gen_instance(gp)).dump(), other);
  }
}

TEST(GenInstance, FeasibleAndValid) {
  for (Variant v : {Variant::unit_disk, Variant::line_constrained, Variant::lower_halfplane, Variant::line_separable}) {
    GenParams gp;
    gp.variant = v;
    gp.n = 100;
    gp.m = 50;
    gp.seed = 3;
    const Instance inst = gen_instance(gp);
    EXPECT_EQ(inst.points.size(), 100u);
    EXPECT_EQ(inst.regions.size(), 50u);
    const Instance n = normalize(inst);
    EXPECT_TRUE(validate(n).ok()) << to_string(v);
    const SigmaTable sig = oracle::brute_sigma(prune_contained(n));
    EXPECT_TRUE(std::all_of(sig.begin(), sig.end(), [](const SigmaEntry& e) { return e.covered(); }));
  }
}

TEST(GenInstance, LineConstrainedPointsMayLieBelow) {
  GenParams gp;
  gp.variant = Variant::line_constrained;
  gp.n = 200;
  gp.m = 20;
  const Instance inst = gen_instance(gp);
  EXPECT_TRUE(std::any_of(inst.points.begin(), inst.points.end(), [](const Point& p) { return p.y < 0; }));
  for (const Region& s : inst.regions) {
    EXPECT_EQ(s.cy, 0);
    EXPECT_GE(s.radius, gp.min_radius);
    EXPECT_LE(s.radius, gp.max_radius);
  }
}

TEST(GenInstance, UnitDiskCentersInBand) {
  GenParams gp;
  gp.n = 10;
  gp.m = 200;
  for (const Region& s : gen_instance(gp).regions) {
    EXPECT_LE(s.cy, 0);
    EXPECT_GE(s.cy, -0.9 * gp.radius);
    EXPECT_EQ(s.radius, gp.radius);
  }
}

TEST(GenInstance, NoPoints) {
  GenParams gp;
  gp.n = 0;
  const Instance inst = gen_instance(gp);
  EXPECT_TRUE(inst.points.empty());
  EXPECT_TRUE(validate(normalize(inst)).ok());
}
