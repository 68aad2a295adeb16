#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pstop/builders.hpp"
#include "pstop/homotopy.hpp"
#include "pstop/invariants.hpp"

using namespace pstop;

TEST(Interval, StructureMaps) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto iv = interval(n);
    EXPECT_EQ(iv.space, path_space(n));
    EXPECT_EQ(compose(iv.proj, iv.end0), identity_map(point_space()));
    EXPECT_EQ(compose(iv.proj, iv.end1), identity_map(point_space()));
    EXPECT_EQ(iv.end1(0), n);
  }
  EXPECT_THROW(interval(0), std::invalid_argument);
}

TEST(Cylinder, Examples) {
  EXPECT_TRUE(are_isomorphic(cylinder(point_space(), 3).space, path_space(3)));
  EXPECT_EQ(cylinder(Space(), 2).space.size(), 0u);
  const Space c = cylinder(path_space(1), 1).space;
  ASSERT_EQ(c.size(), 4u);
  for (Point v = 0; v < 4; ++v) EXPECT_EQ(c.point_limits(v), full_subset(4));
}

TEST(Cylinder, MatchesHandBuiltProduct) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Space x = oracle::random_space(rng, 1 + trial % 4);
    const std::size_t n = 1 + trial % 3;
    const auto cyl = cylinder(x, n);
    const Space ref = oracle::cylinder_space(x, n);
    for (Point u = 0; u < ref.size(); ++u) EXPECT_EQ(cyl.space.point_limits(u), ref.point_limits(u));
    EXPECT_TRUE(cyl.i0.continuous() && cyl.i1.continuous() && cyl.p.continuous());
  }
}

TEST(Cylinder, Naturality) {
  const auto gens = oracle::generator_spaces();
  for (const auto& x : gens)
    for (const auto& y : gens) {
      if (x.size() > 3 || y.size() > 3) continue;
      for (const auto& a : continuous_maps(x, y)) {
        const SpaceMap f(x, y, a);
        for (std::size_t n = 1; n <= 2; ++n) {
          const auto cx = cylinder(x, n), cy = cylinder(y, n);
          const SpaceMap if_ = cylinder_map(f, n);
          EXPECT_TRUE(if_.continuous());
          EXPECT_EQ(compose(if_, cx.i0), compose(cy.i0, f));
          EXPECT_EQ(compose(if_, cx.i1), compose(cy.i1, f));
          EXPECT_EQ(compose(cy.p, if_), compose(f, cx.p));
        }
      }
    }
}

TEST(OneStep, Examples) {
  const Space p3 = path_space(2);
  const SpaceMap id = identity_map(p3);
  EXPECT_TRUE(one_step(id, id).related);
  const Space p2 = path_space(1);
  const auto maps = continuous_maps(p2, p2);
  ASSERT_EQ(maps.size(), 4u);
  for (const auto& f : maps)
    for (const auto& g : maps) EXPECT_TRUE(one_step_related(p2, p2, f, g));
  const Space two = coproduct(p3, p3).space;
  const auto r = one_step(constant_map(p3, two, 0), constant_map(p3, two, 3));
  EXPECT_FALSE(r.related);
  EXPECT_TRUE(r.violation.has_value());
  EXPECT_THROW(one_step(id, identity_map(p2)), DomainMismatch);
}

TEST(OneStep, MatchesOracleAndCylinderContinuity) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const Space x = oracle::random_space(rng, 1 + trial % 3);
    const Space y = oracle::random_space(rng, 1 + (trial / 3) % 3);
    const auto maps = continuous_maps(x, y);
    const Space cyl = oracle::cylinder_space(x, 1);
    for (const auto& f : maps)
      for (const auto& g : maps) {
        const bool lib = one_step_related(x, y, f, g);
        EXPECT_EQ(lib, oracle::one_step(x, y, f, g));
        Assignment h(cyl.size());
        for (Point a = 0; a < x.size(); ++a) {
          h[cyl_point(1, a, 0)] = f[a];
          h[cyl_point(1, a, 1)] = g[a];
        }
        EXPECT_EQ(lib, oracle::brute_continuous(cyl, y, h));
        EXPECT_EQ(lib, one_step_related(x, y, g, f));
      }
  }
}

TEST(Homotopy, ConcatenateAndReverse) {
  const Space i2 = path_space(2);
  const Space pt = point_space();
  const Homotopy a = homotopy_from_chain(pt, i2, {{0}, {1}});
  const Homotopy b = homotopy_from_chain(pt, i2, {{1}, {2}});
  const Homotopy ab = concatenate(a, b);
  EXPECT_EQ(ab.length(), 2u);
  EXPECT_EQ(ab.start().assignment(), Assignment{0});
  EXPECT_EQ(ab.finish().assignment(), Assignment{2});
  EXPECT_TRUE(ab.map().continuous());
  const Homotopy loop = concatenate(ab, reverse(ab));
  EXPECT_EQ(loop.start(), loop.finish());
  EXPECT_EQ(loop.length(), 4u);
  const Homotopy c = constant_homotopy(identity_map(pt), 1);
  EXPECT_THROW(concatenate(b, homotopy_from_chain(pt, i2, {{0}, {1}})), EndMismatch);
  const Homotopy padded = concatenate(homotopy_from_chain(pt, i2, {{0}, {0}}), a);
  EXPECT_EQ(padded.finish(), a.finish());
  EXPECT_EQ(c.length(), 1u);
}

TEST(Homotopy, RejectsDiscontinuousChain) {
  EXPECT_THROW(homotopy_from_chain(point_space(), path_space(2), {{0}, {2}}), NotContinuous);
}

TEST(Gluing, LiteralFailsSubstituteHolds) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto r = gluing_check(interval(n));
    EXPECT_FALSE(r.literal_holds);
    EXPECT_EQ(r.glued_size, 2 * n + 1);
    EXPECT_EQ(r.interval_size, n + 1);
    for (const auto& s : r.substitutes) EXPECT_TRUE(s.holds);
    EXPECT_EQ(r.substitutes.size(), 15u);  // m, n ≥ 1 with m + n ≤ 6
  }
  EXPECT_TRUE(interval_gluing_iso(1, 1).has_value());
}

TEST(HomotopyClasses, Examples) {
  const Space p3 = path_space(2);
  EXPECT_EQ(homotopy_classes(p3, point_space()).count, 1u);
  const Space two = coproduct(p3, cycle_space(4)).space;
  EXPECT_EQ(homotopy_classes(point_space(), two).count, pi0(two).count);
  const Space p2 = path_space(1);
  const auto c = homotopy_classes(p2, p2);
  EXPECT_EQ(c.maps.size(), 4u);
  EXPECT_EQ(c.count, 1u);
  EXPECT_THROW(homotopy_classes(complete_space(8), complete_space(8), 1000), ExponentialTooLarge);
}

TEST(HomotopyClasses, AgreeWithCylinderOracle) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    const Space x = oracle::random_space(rng, 1 + trial % 3, 0.3);
    const Space y = oracle::random_space(rng, 1 + (trial / 3) % 3, 0.3);
    const auto hc = homotopy_classes(x, y);
    for (std::size_t i = 0; i < hc.maps.size(); ++i)
      for (std::size_t j = 0; j < hc.maps.size(); ++j) {
        const bool same = hc.class_of[i] == hc.class_of[j];
        // Any chain has at most |𝒞(X,Y)| − 1 steps.
        EXPECT_EQ(same, oracle::cylinder_homotopic(x, y, hc.maps[i], hc.maps[j],
                                                   std::max<std::size_t>(1, hc.maps.size() - 1)));
      }
  }
}

TEST(AreHomotopic, ExamplesAndShortestChains) {
  const Space p3 = path_space(2);
  const SpaceMap id = identity_map(p3);
  const auto self = are_homotopic(id, id);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->size(), 1u);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Space in = path_space(n);
    const auto chain = are_homotopic(identity_map(in), constant_map(in, in, 0));
    ASSERT_TRUE(chain.has_value());
    EXPECT_EQ(chain->size(), n + 1);
    EXPECT_NO_THROW(homotopy_from_chain(in, in, *chain));
  }
  const Space two = coproduct(p3, p3).space;
  EXPECT_FALSE(are_homotopic(constant_map(p3, two, 0), constant_map(p3, two, 4)).has_value());
}

TEST(AreHomotopic, ChainLengthMatchesCylinderOracle) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const Space x = oracle::random_space(rng, 1 + trial % 3, 0.3);
    const Space y = oracle::random_space(rng, 2 + (trial / 3) % 2, 0.3);
    const auto maps = continuous_maps(x, y);
    for (const auto& f : maps)
      for (const auto& g : maps) {
        const auto chain = are_homotopic(SpaceMap(x, y, f), SpaceMap(x, y, g));
        for (std::size_t n = 1; n <= 3; ++n) {
          const bool within = chain && chain->size() - 1 <= n && f != g;
          if (f == g) continue;
          EXPECT_EQ(within, oracle::cylinder_homotopic(x, y, f, g, n));
        }
      }
  }
}

TEST(Equivalence, Examples) {
  const Space p3 = path_space(2);
  const auto id = is_homotopy_equivalence(identity_map(p3));
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->inverse, identity_map(p3));
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto iv = interval(n);
    const auto w = is_homotopy_equivalence(iv.end0);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->inverse, iv.proj);
    EXPECT_LE(w->chain_fg.size(), n + 1);
  }
  EXPECT_FALSE(is_homotopy_equivalence(constant_map(p3, discrete_space(2), 0)).has_value());
}

TEST(Equivalence, StableUnderIsomorphism) {
  const Space c4 = cycle_space(4);
  const SpaceMap rot(c4, c4, {1, 2, 3, 0});
  ASSERT_TRUE(is_isomorphism(rot));
  const auto iv = interval(2);
  const SpaceMap f(point_space(), c4, {0});
  EXPECT_EQ(is_homotopy_equivalence(f).has_value(),
            is_homotopy_equivalence(compose(rot, f)).has_value());
  EXPECT_TRUE(is_homotopy_equivalence(compose(SpaceMap(path_space(2), path_space(2), {2, 1, 0}),
                                              iv.end0))
                  .has_value());
}

TEST(RelativeCylinder, Examples) {
  const Space i2 = path_space(2);
  const auto empty = relative_cylinder(SpaceMap(Space(), i2, {}), 2);
  EXPECT_TRUE(are_isomorphic(empty.space, cylinder(i2, 2).space));
  const auto full = relative_cylinder(identity_map(i2), 2);
  EXPECT_TRUE(are_isomorphic(full.space, i2));
  EXPECT_TRUE(full.fold_factors);
  const SpaceMap end(point_space(), i2, {0});
  const auto rel = relative_cylinder(end, 1);
  EXPECT_EQ(rel.space.size(), 3u * 2 - 1);
  EXPECT_TRUE(rel.fold_factors);
  EXPECT_THROW(relative_cylinder(SpaceMap(discrete_space(2), i2, {0, 0}), 1), NotEmbedding);
}

TEST(RelativeCylinder, HomotopyRel) {
  const Space i2 = path_space(2);
  const SpaceMap end(point_space(), i2, {0});
  // Endpoint fixed at 0: contracting toward 0 is rel {0}, toward 2 is not.
  EXPECT_TRUE(is_homotopy_rel(homotopy_from_chain(i2, i2, {{0, 1, 2}, {0, 1, 1}, {0, 0, 1}, {0, 0, 0}}), end));
  EXPECT_FALSE(is_homotopy_rel(homotopy_from_chain(i2, i2, {{0, 1, 2}, {1, 1, 2}}), end));
  EXPECT_TRUE(is_homotopy_rel(constant_homotopy(identity_map(i2), 2), identity_map(i2)));
}
