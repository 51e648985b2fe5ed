#include <gtest/gtest.h>

#include <random>

#include "lsdc/instance.hpp"
#include "lsdc/oracle.hpp"
#include "test_support.hpp"

using namespace lsdc;
using namespace lsdc::testing;

namespace {

ErrorCode code_of(const Instance& inst) {
  try {
    normalize(inst);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "normalize did not throw";
  return ErrorCode::bad_schema;
}

}  // namespace

TEST(Normalize, ReflectsLineConstrainedPoints) {
  const Instance inst = make_disks(Variant::line_constrained, {{1, -2}}, {{{0, 0, 3}}});
  const Instance n = normalize(inst);
  EXPECT_EQ(n.points[0].x, 1);
  EXPECT_EQ(n.points[0].y, 2);
}

TEST(Normalize, ShiftsTheLine) {
  const Instance inst = make_disks(Variant::line_separable, {{1, 2}}, {{{0, 1, 3}}}, 1.0);
  const Instance n = normalize(inst);
  EXPECT_EQ(n.line_y, 0);
  EXPECT_EQ(n.points[0].y, 1);
  EXPECT_EQ(n.regions[0].cy, 0);
}

TEST(Normalize, ShiftsHalfPlaneIntercepts) {
  Instance inst = make_halfplanes({{0, 3}}, {{{1, 4}}});
  inst.line_y = 1;
  const Instance n = normalize(inst);
  EXPECT_EQ(n.regions[0].intercept, 3);
  EXPECT_EQ(n.points[0].y, 2);
}

TEST(Normalize, Errors) {
  EXPECT_EQ(code_of(make_disks(Variant::unit_disk, {}, {{{0, 0, 1}}, {{1, 0, 2}}})), ErrorCode::mixed_radii);
  EXPECT_EQ(code_of(make_disks(Variant::unit_disk, {{0, -1}}, {{{0, 0, 1}}})), ErrorCode::point_below_line);
  EXPECT_EQ(code_of(make_disks(Variant::line_separable, {}, {{{0, 0.5, 1}}})), ErrorCode::center_above_line);
  EXPECT_EQ(code_of(make_disks(Variant::line_constrained, {}, {{{0, -0.5, 1}}})), ErrorCode::center_off_line);
  EXPECT_EQ(code_of(make_disks(Variant::unit_disk, {{2e6, 1}}, {{{0, 0, 1}}})), ErrorCode::coordinate_range);
  EXPECT_EQ(code_of(make_disks(Variant::unit_disk, {}, {{{0, 0, 0}}})), ErrorCode::bad_schema);
  Instance mixed = make_disks(Variant::lower_halfplane, {}, {{{0, 0, 1}}});
  EXPECT_EQ(code_of(mixed), ErrorCode::region_kind_mismatch);
}

TEST(Normalize, Idempotent) {
  for (Variant v : kGeneratedVariants)
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Instance inst = random_instance(v, seed, 30, 30);
      inst.line_y = 0.25;
      for (Point& p : inst.points) p.y += 0.25;
      for (Region& r : inst.regions) (r.is_disk() ? r.cy : r.intercept) += 0.25;
      const Instance once = normalize(inst);
      const Instance twice = normalize(once);
      ASSERT_EQ(once.points.size(), twice.points.size());
      for (std::size_t k = 0; k < once.points.size(); ++k) {
        EXPECT_EQ(once.points[k].x, twice.points[k].x);
        EXPECT_EQ(once.points[k].y, twice.points[k].y);
      }
      for (std::size_t k = 0; k < once.regions.size(); ++k) {
        EXPECT_EQ(once.regions[k].cy, twice.regions[k].cy);
        EXPECT_EQ(once.regions[k].intercept, twice.regions[k].intercept);
      }
    }
}

TEST(Validate, LineConstrainedWithMixedRadiiIsValid) {
  const Instance inst = make_disks(Variant::line_constrained, {{0, 1}}, {{{0, 0, 1}}, {{1, 0, 3}}, {{5, 0, 0.5}}});
  EXPECT_TRUE(validate(normalize(inst)).ok());
}

TEST(Validate, FlagsDoubleCrossingAboveTheLine) {
  const Instance inst = make_disks(Variant::line_separable, {}, {{{0, -0.1, 5}}, {{0, -3, 7}}});
  const ValidationReport r = validate(normalize(inst));
  EXPECT_FALSE(r.ok());
  // Check that the pair really does cross twice with y > 0.
  const Crossings c = upper_crossings(inst.regions[0], inst.regions[1]);
  EXPECT_EQ(c.count, 2u);
  EXPECT_GT(c.y[0], 0);
  EXPECT_GT(c.y[1], 0);
}

TEST(Validate, EmptyPointSetIsValid) {
  EXPECT_TRUE(validate(normalize(make_disks(Variant::unit_disk, {}, {{{0, 0, 1}}}))).ok());
}

TEST(PruneContained, DropsContainedDisk) {
  const SortedInstance si = prune_contained(normalize(make_disks(Variant::line_constrained, {}, {{{0, 0, 3}}, {{1, 0, 1}}})));
  ASSERT_EQ(si.kept.size(), 1u);
  EXPECT_EQ(si.kept[0].id, 0u);
  EXPECT_EQ(si.dropped, std::vector<std::size_t>{1});
}

TEST(PruneContained, KeepsRowOfThreeInOrder) {
  const SortedInstance si = prune_contained(normalize(row_of_three()));
  ASSERT_EQ(si.kept.size(), 3u);
  EXPECT_EQ(si.orig_of, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(si.extents[0].lo, -2);
  EXPECT_EQ(si.extents[1].lo, 1);
  EXPECT_EQ(si.extents[2].hi, 8);
}

TEST(PruneContained, EqualSlopeHalfPlanesKeepLargerIntercept) {
  const SortedInstance si = prune_contained(normalize(make_halfplanes({}, {{{1, 0}}, {{1, -1}}})));
  ASSERT_EQ(si.kept.size(), 1u);
  EXPECT_EQ(si.kept[0].intercept, 0);
  EXPECT_EQ(si.dropped, std::vector<std::size_t>{1});
}

TEST(PruneContained, DuplicatesKeepLowestId) {
  const SortedInstance si =
      prune_contained(normalize(make_disks(Variant::unit_disk, {}, {{{2, -0.5, 1}}, {{0, 0, 1}}, {{2, -0.5, 1}}})));
  ASSERT_EQ(si.kept.size(), 2u);
  EXPECT_EQ(si.orig_of, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(si.dropped, std::vector<std::size_t>{2});
}

TEST(PruneContained, VacuousDisksAreDropped) {
  const SortedInstance si = prune_contained(normalize(make_disks(Variant::line_separable, {}, {{{0, -5, 1}}, {{0, 0, 1}}})));
  EXPECT_EQ(si.orig_of, std::vector<std::size_t>{1});
  EXPECT_EQ(si.dropped, std::vector<std::size_t>{0});
}

TEST(PruneContained, ExtentsStrictlyIncreaseAndNoContainment) {
  for (Variant v : kGeneratedVariants)
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const Instance inst = random_instance(v, seed, 5, 60);
      const SortedInstance si = prune_contained(normalize(inst));
      EXPECT_EQ(si.kept.size() + si.dropped.size(), inst.regions.size());
      for (std::size_t i = 1; i < si.kept.size(); ++i) {
        if (v != Variant::lower_halfplane) {
          EXPECT_LT(si.extents[i - 1].lo, si.extents[i].lo);
          EXPECT_LT(si.extents[i - 1].hi, si.extents[i].hi);
        } else {
          EXPECT_LT(si.kept[i - 1].slope, si.kept[i].slope);
        }
      }
      for (std::size_t i = 0; i < si.kept.size(); ++i)
        for (std::size_t k = 0; k < si.kept.size(); ++k)
          if (i != k) EXPECT_FALSE(contains_region(si.kept[i], si.kept[k])) << i << " " << k;
    }
}

TEST(PruneContained, UnionMembershipPreserved) {
  std::mt19937_64 rng(99);
  for (Variant v : kGeneratedVariants)
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Instance inst = normalize(random_instance(v, seed, 5, 60));
      const SortedInstance si = prune_contained(inst);
      double hi_x = 0;
      for (const Region& s : inst.regions) hi_x = std::max(hi_x, s.is_disk() ? s.cx : 10.0);
      std::uniform_real_distribution<double> ux(-3, hi_x + 3), uy(0, v == Variant::lower_halfplane ? 6 : 2.5);
      for (int k = 0; k < 10000 / 20; ++k) {
        const Point p{ux(rng), uy(rng), 0};
        const bool all = std::any_of(inst.regions.begin(), inst.regions.end(),
                                     [&](const Region& s) { return oracle::inside(s, p); });
        const bool kept = std::any_of(si.kept.begin(), si.kept.end(),
                                      [&](const Region& s) { return oracle::inside(s, p); });
        EXPECT_EQ(all, kept);
      }
    }
}

TEST(PruneContained, PointsSortedByXThenId) {
  const SortedInstance si =
      prune_contained(normalize(make_disks(Variant::unit_disk, {{2, 0.1}, {1, 0.2}, {1, 0.1}}, {{{0, 0, 1}}})));
  EXPECT_EQ(si.points[0].id, 1u);
  EXPECT_EQ(si.points[1].id, 2u);
  EXPECT_EQ(si.points[2].id, 0u);
}
