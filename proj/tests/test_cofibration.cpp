#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pstop/builders.hpp"
#include "pstop/cofibration.hpp"

using namespace pstop;

namespace {

// Image neither receives nor sends any convergence across its boundary.
bool clopen_image(const Space& a, const Subset& s) {
  for (Point y = 0; y < a.size(); ++y)
    for (Point x = 0; x < a.size(); ++x)
      if (a.converges(y, x) && s.test(y) != s.test(x)) return false;
  return true;
}

SpaceMap random_inclusion(std::mt19937_64& rng, std::size_t max_points) {
  const Space a = oracle::random_space(rng, 1 + rng() % max_points, 0.35);
  Subset u(a.size());
  for (Point p = 0; p < a.size(); ++p)
    if (rng() % 2) u.set(p);
  return subspace(a, u).inclusion;
}

Subset image_of(const SpaceMap& i) {
  Subset s(i.codomain().size());
  for (Point b = 0; b < i.domain().size(); ++b) s.set(i(b));
  return s;
}

}  // namespace

TEST(Cofibration, IsomorphismsAndEmptyDomain) {
  const Space c4 = cycle_space(4);
  EXPECT_TRUE(is_cofibration(identity_map(c4)).cofibration);
  EXPECT_TRUE(is_cofibration(SpaceMap(c4, c4, {1, 2, 3, 0})).cofibration);
  EXPECT_TRUE(is_cofibration(SpaceMap(Space(), c4, {})).cofibration);
}

TEST(Cofibration, EndInclusionOfIntervalIsNot) {
  // ∗ → I₂ has no retract at any cylinder length tried.
  const SpaceMap end(point_space(), path_space(2), {0});
  const auto r = is_cofibration(end, 1, 3);
  EXPECT_FALSE(r.cofibration);
  EXPECT_EQ(r.tried, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Cofibration, ClopenEmbeddingsExactly) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const SpaceMap i = random_inclusion(rng, 4);
    const bool expected = clopen_image(i.codomain(), image_of(i));
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto r = is_cofibration(i, n);
      EXPECT_EQ(r.cofibration, expected);
      if (r.retract) {
        const auto prob = solve_retract(i, n);
        ASSERT_TRUE(prob.retract.has_value());
        EXPECT_TRUE(prob.retract->continuous());
        EXPECT_EQ(compose(*prob.retract, prob.j0), identity_map(prob.j0.domain()));
      }
    }
  }
}

TEST(Cofibration, RejectsNonInjective) {
  EXPECT_THROW(solve_retract(SpaceMap(discrete_space(2), point_space(), {0, 0}), 1), NotEmbedding);
}

TEST(Cofibration, CompositionOfCofibrations) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const SpaceMap j = random_inclusion(rng, 4);
    Subset u(j.domain().size());
    for (Point p = 0; p < u.size(); ++p)
      if (rng() % 2) u.set(p);
    const SpaceMap i = subspace(j.domain(), u).inclusion;
    if (!is_cofibration(i).cofibration || !is_cofibration(j).cofibration) continue;
    EXPECT_TRUE(is_cofibration(compose(j, i)).cofibration);
  }
}

TEST(Hep, Examples) {
  const Space i2 = path_space(2);
  const SpaceMap id = identity_map(i2);
  const Homotopy g = homotopy_from_chain(i2, i2, {{0, 1, 2}, {0, 1, 1}, {0, 0, 1}});
  const auto same = hep_solve(id, id, g);
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->map(), g.map());
  const SpaceMap end(point_space(), i2, {0});
  const auto fixed = hep_solve(end, id, constant_homotopy(SpaceMap(point_space(), i2, {0}), 1));
  ASSERT_TRUE(fixed.has_value());
  EXPECT_EQ(fixed->start(), id);
  EXPECT_THROW(hep_solve(end, id, constant_homotopy(SpaceMap(point_space(), i2, {2}), 1)),
               IncompatibleData);
}

TEST(Hep, EndInclusionFailsOnItsCanonicalTarget) {
  const Space i2 = path_space(2);
  const SpaceMap end(point_space(), i2, {0});
  // Sliding the end point inside I₂ itself extends fine.
  const Homotopy slide = homotopy_from_chain(point_space(), i2, {{0}, {1}});
  EXPECT_TRUE(hep_solve(end, identity_map(i2), slide).has_value());
  // The pushout legs of I₂ ∪ I₁∗ admit no extension.
  const auto prob = solve_retract(end, 1);
  EXPECT_FALSE(hep_solve(end, prob.pushout.q0, Homotopy(point_space(), 1, prob.pushout.q1))
                   .has_value());
  const Space k3 = complete_space(3);
  const SpaceMap f(i2, k3, {0, 1, 2});
  EXPECT_TRUE(hep_solve(end, f, homotopy_from_chain(point_space(), k3, {{0}, {2}})).has_value());
}

TEST(Hep, RetractGivesEveryExtension) {
  std::mt19937_64 rng(101);
  std::vector<Space> targets;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 3; ++k) targets.push_back(oracle::random_space(rng, n, 0.4));
  for (int trial = 0; trial < 20; ++trial) {
    const SpaceMap i = random_inclusion(rng, 3);
    const bool cof = is_cofibration(i).cofibration;
    if (!cof) continue;
    for (const auto& z : targets)
      for (const auto& fa : continuous_maps(i.codomain(), z)) {
        const SpaceMap f(i.codomain(), z, fa);
        const SpaceMap fi = compose(f, i);
        for (const auto& next : one_step_neighbors(i.domain(), z, fi.assignment())) {
          const Homotopy g = homotopy_from_chain(i.domain(), z, {fi.assignment(), next});
          EXPECT_TRUE(hep_solve(i, f, g, 0).has_value());
        }
      }
  }
}

TEST(Hep, CanonicalSolutionIsARetract) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const SpaceMap i = random_inclusion(rng, 3);
    const auto prob = solve_retract(i, 1);
    // f and G are the legs of A ∪_{i₀} IB.
    const Space& apex = prob.pushout.apex;
    const Homotopy g(i.domain(), 1, prob.pushout.q1);
    const auto h = hep_solve(i, prob.pushout.q0, g, 0);
    EXPECT_EQ(h.has_value(), prob.retract.has_value());
    if (h) {
      EXPECT_EQ(h->map().codomain(), apex);
      EXPECT_EQ(compose(h->map(), prob.j0), identity_map(apex));
    }
  }
}

TEST(Interchange, IdentitiesHold) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 12; ++trial) {
    const Space x = oracle::random_space(rng, 1 + trial % 3);
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto c = check_interchange(x, n);
      EXPECT_TRUE(c.continuous);
      EXPECT_TRUE(c.involution);
      EXPECT_TRUE(c.t_ik);
      EXPECT_TRUE(c.t_iik);
    }
  }
  const auto t = interchange(point_space(), 1);
  EXPECT_EQ(compose(t.t, t.t), identity_map(t.iix));
}

TEST(Factorize, Examples) {
  const auto id = factorize(identity_map(point_space()), 2);
  EXPECT_TRUE(are_isomorphic(id.mapping_cylinder, path_space(2)));
  EXPECT_EQ(compose(id.g, id.i), id.f);
  const auto rep = verify_factorization(id);
  EXPECT_TRUE(rep.commutes);
  EXPECT_EQ(rep.equivalence, Verdict::Pass);
  // i is the end inclusion ∗ → I₂, which is not a cofibration.
  EXPECT_EQ(rep.cofibration, Verdict::Fail);
  EXPECT_EQ(rep.verdict(), Verdict::Fail);
  const auto p2 = factorize(SpaceMap(point_space(), path_space(1), {0}), 1);
  EXPECT_EQ(p2.mapping_cylinder.size(), 3u);
  EXPECT_EQ(verify_factorization(p2).equivalence, Verdict::Pass);
  const Space c4 = cycle_space(4);
  const auto iso = factorize(SpaceMap(c4, c4, {1, 2, 3, 0}), 1);
  EXPECT_EQ(verify_factorization(iso).equivalence, Verdict::Pass);
}

TEST(Factorize, AlwaysCommutes) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    const Space x = oracle::random_space(rng, 1 + trial % 3);
    const Space y = oracle::random_space(rng, 1 + (trial / 3) % 3);
    const auto maps = continuous_maps(x, y);
    const SpaceMap f(x, y, maps[rng() % maps.size()]);
    const auto fz = factorize(f, 1 + trial % 2);
    EXPECT_EQ(compose(fz.g, fz.i), f);
    EXPECT_EQ(fz.mapping_cylinder.size(), x.size() * (fz.length) + y.size());
  }
}

TEST(Retract, MapRetractionOfIdentity) {
  const Space p3 = path_space(2);
  const SpaceMap id = identity_map(p3);
  const auto r = is_retract_of(id, id);
  ASSERT_TRUE(r.has_value());
  EXPECT_FALSE(is_retract_of(identity_map(discrete_space(2)), identity_map(point_space())));
}

TEST(AxiomSuite, ICategoryVerdictsPerAxiom) {
  std::vector<std::pair<std::string, Space>> sample{
      {"point", point_space()}, {"i1", path_space(1)}, {"i2", path_space(2)},
      {"s0", discrete_space(2)}};
  SuiteOptions opt;
  opt.seed = 3;
  const auto rep = verify_axioms(sample, Suite::ICategory, opt);
  std::map<std::string, Verdict> by_id;
  for (const auto& a : rep.axioms) by_id[a.id] = a.verdict();
  EXPECT_EQ(by_id.at("cylinder"), Verdict::Pass);
  EXPECT_EQ(by_id.at("pushout"), Verdict::Pass);
  EXPECT_EQ(by_id.at("interchange"), Verdict::Pass);
  EXPECT_EQ(by_id.at("relative-cylinder"), Verdict::Fail);
  EXPECT_EQ(rep.verdict(), Verdict::Fail);
  // Identical options give an identical report.
  EXPECT_EQ(verify_axioms(sample, Suite::ICategory, opt).to_json().dump(), rep.to_json().dump());
}

TEST(AxiomSuite, ParseSuiteNames) {
  EXPECT_EQ(parse_suite("i-category"), Suite::ICategory);
  EXPECT_EQ(parse_suite("cofibration-category"), Suite::CofibrationCategory);
  EXPECT_FALSE(parse_suite("model").has_value());
}
