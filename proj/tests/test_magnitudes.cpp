#include <set>

#include <gtest/gtest.h>

#include "hamcircle/hamcircle.hpp"
#include "oracles.hpp"

using namespace hc;

namespace {

using EdgeList = std::vector<Edge>;

Multigraph triangle() { return make_multigraph(minimal_profile(2), {{0, 1}, {0, 2}, {1, 2}}); }

// 3x3 determinant by cofactor expansion.
Rat det3(const RationalMatrix& M) {
  return M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) - M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
         M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
}

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(MagnitudeSum, KnownProfiles) {
  EXPECT_EQ(magnitude_sum(validate_profile(2, {0, 1, 1, 2})), 8);
  EXPECT_EQ(magnitude_sum(minimal_profile(2)), 9);
  EXPECT_EQ(magnitude_sum(minimal_profile(3)), 24);
  EXPECT_EQ(magnitude_sum(minimal_profile(4)), 50);
}

TEST(MagnitudeSum, EveryPairingOfEveryFixture) {
  for (const auto& ws : oracle::fixtures()) {
    Int T = magnitude_sum(ws.profile);
    auto all = all_pairings(ws);
    ASSERT_FALSE(all.empty());
    for (const auto& wg : all) {
      Rat total = 0;
      for (const auto& x : magnitudes_from_weights(wg, ws).m) total += x;
      EXPECT_EQ(total, T);
    }
  }
}

TEST(Labelings, TriangleIncludesThrees) {
  SearchOptions o;
  std::set<std::vector<Rat>> seen;
  long count = 0;
  enumerate_magnitude_labelings(triangle(), o, [&](const MagnitudeLabeling& ml, long) {
    Rat s = 0;
    for (const auto& x : ml.m) {
      EXPECT_GE(x, 0);
      s += x;
    }
    EXPECT_EQ(s, 9);
    seen.insert(ml.m);
    ++count;
  });
  EXPECT_TRUE(seen.count({3, 3, 3}));
  EXPECT_EQ(static_cast<long>(seen.size()), count);
}

TEST(Labelings, CompleteGraphOnFiveWithDivisorFive) {
  EdgeList e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  SearchOptions o;
  o.divisor_C = 5;
  o.force_unit_edges = true;
  std::vector<std::vector<Rat>> out;
  enumerate_magnitude_labelings(make_multigraph(minimal_profile(4), e), o,
                                [&](const MagnitudeLabeling& ml, long C) {
                                  EXPECT_EQ(C, 5);
                                  out.push_back(ml.m);
                                });
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], std::vector<Rat>(10, Rat(5)));
}

TEST(Labelings, S2xS2GammaThreeCompositions) {
  auto g = make_multigraph(validate_profile(2, {0, 1, 1, 2}), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  SearchOptions o;
  o.positive_parts = true;
  long count = 0;
  bool twos = false;
  enumerate_magnitude_labelings(g, o, [&](const MagnitudeLabeling& ml, long) {
    ++count;
    if (ml.m == std::vector<Rat>(4, Rat(2))) twos = true;
  });
  EXPECT_EQ(count, 35);  // C(7,3)
  EXPECT_TRUE(twos);
  auto f = solve_weights(g, ints({2, 2, 2, 2}));
  ASSERT_TRUE(f);
}

TEST(Solve, TriangleWithThrees) {
  auto f = solve_weights(triangle(), ints({3, 3, 3}));
  ASSERT_TRUE(f);
  EXPECT_EQ(*f->nullspace.positive_witness, ints({1, 2, 1}));
  ASSERT_EQ(f->nullspace.basis.size(), 2u);
  for (const auto& b : f->nullspace.basis) EXPECT_EQ(b[1], b[0] + b[2]);
}

TEST(Solve, S2xS2AllTwos) {
  auto g = make_multigraph(validate_profile(2, {0, 1, 1, 2}), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto f = solve_weights(g, ints({2, 2, 2, 2}));
  ASSERT_TRUE(f);
  EXPECT_EQ(*f->nullspace.positive_witness, ints({1, 1, 1, 1}));
  // edges sorted 01, 02, 13, 23: kernel is w01 = w23 and w02 = w13
  ASSERT_EQ(f->nullspace.basis.size(), 2u);
  for (const auto& b : f->nullspace.basis) {
    EXPECT_EQ(b[0], b[3]);
    EXPECT_EQ(b[1], b[2]);
  }
}

TEST(Solve, NonsingularRejected) {
  auto M = family_matrix(triangle(), ints({4, 4, 1}));
  EXPECT_EQ(det3(M), 5);
  EXPECT_FALSE(solve_weights(triangle(), ints({4, 4, 1})));
}

TEST(Solve, CycleNeedsZeroMagnitude) {
  auto g = make_multigraph(minimal_profile(2), {{0, 2}, {0, 2}, {1, 1}});
  EXPECT_TRUE(solve_weights(g, ints({4, 4, 0})));
  EXPECT_FALSE(solve_weights(g, ints({4, 4, 1})));
}

TEST(Instances, PrimitivePointsOfTriangleFamily) {
  auto f = *solve_weights(triangle(), ints({3, 3, 3}));
  auto inst = family_instances(f, 6);
  // oracle: w01, w12 in [1,6], w02 = w01 + w12 <= 6, gcd 1
  std::set<std::vector<std::vector<Int>>> want;
  for (long x = 1; x <= 6; ++x)
    for (long z = 1; z <= 6; ++z) {
      if (x + z > 6 || std::gcd(x, z) != 1) continue;
      want.insert(read_weights(weighted(triangle(), ints({x, x + z, z}))).weights);
    }
  std::set<std::vector<std::vector<Int>>> got;
  for (const auto& ws : inst) got.insert(ws.weights);
  EXPECT_EQ(got, want);
}

TEST(Search, PrunedSearchKeepsEverySolvableLabeling) {
  for (int n : {2, 3}) {
    for (bool force : {false, true}) {
      if (n == 3 && !force) continue;
      SearchOptions o;
      o.force_unit_edges = force;
      for (const auto& g : enumerate_multigraphs(minimal_profile(n), GraphFilter::Nonnegative, Dedup::Reversal)) {
        for (long C : divisor_candidates(g, o)) {
          std::set<std::vector<Int>> raw, solvable, pruned;
          SearchOptions oc = o;
          oc.divisor_C = C;
          enumerate_magnitude_labelings(g, oc, [&](const MagnitudeLabeling& ml, long) {
            std::vector<Int> m;
            for (const auto& x : ml.m) m.push_back(x.get_num());
            raw.insert(m);
            if (solve_weights(g, m)) solvable.insert(m);
          });
          auto plan = make_plan(g, o, C);
          run_plan(plan, std::nullopt, o, [&](const std::vector<long>& m) {
            pruned.insert(std::vector<Int>(m.begin(), m.end()));
          });
          for (const auto& m : pruned) EXPECT_TRUE(raw.count(m));
          for (const auto& m : solvable) EXPECT_TRUE(pruned.count(m));
        }
      }
    }
  }
}

TEST(Lemma, MultipleEdgeGcd) {
  // n = 3 with a double edge P0 -> P3 of weights 2 and 4
  auto p = minimal_profile(3);
  WeightedMultigraph wg{make_multigraph(p, {{0, 1}, {0, 3}, {0, 3}, {1, 2}, {1, 2}, {2, 3}}),
                        ints({1, 2, 4, 1, 1, 1})};
  auto ws = read_weights(wg);
  auto r = lemma_filters(wg, ws, SearchOptions{});
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "multiple_edge_gcd");
}

TEST(Lemma, DimensionEightRejectsC1Two) {
  auto ws = ws_from({{1, 2, 3, 4}, {-1, 2, 3, 4}, {-1, -2, 1, 2}, {1, -2, -3, -4}, {-1, -2, -3, -4}});
  auto [x, y] = c1_expressions(ws);
  EXPECT_EQ(x, 2);
  EXPECT_EQ(y, 2);
  EdgeList e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  WeightedMultigraph wg{make_multigraph(minimal_profile(4), e), std::vector<Int>(10, 1)};
  SearchOptions strict;
  strict.dim8_strict = true;
  auto r = lemma_filters(wg, ws, strict);
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "dim8_c1");
}

TEST(Lemma, KnownExamplesPass) {
  for (const auto& ws : {v5_fixture(), v22_fixture(), cp_fixture({5, 3, 1, 0}), grassmannian_fixture({2, 1})}) {
    bool some = false;
    for (const auto& wg : integral_multigraphs(ws)) some = some || lemma_filters(wg, ws, SearchOptions{}).all_pass();
    EXPECT_TRUE(some);
  }
}

TEST(Classify, DimensionFour) {
  ClassifyConfig cfg;
  cfg.opts.force_unit_edges = true;
  auto r = classify(minimal_profile(2), cfg);
  EXPECT_EQ(r.graph_classes, 2);
  ASSERT_EQ(r.families.size(), 1u);
  const auto& f = r.families[0];
  EXPECT_EQ(f.name, "CP^2");
  EXPECT_EQ(f.graph.edges, (EdgeList{{0, 1}, {0, 2}, {1, 2}}));
  ASSERT_EQ(f.nullspace.basis.size(), 2u);
  for (const auto& b : f.nullspace.basis) EXPECT_EQ(b[1], b[0] + b[2]);
}

TEST(Classify, DimensionSix) {
  ClassifyConfig cfg;
  cfg.opts.force_unit_edges = true;
  auto r = classify(minimal_profile(3), cfg);
  EXPECT_EQ(r.graph_classes, 7);
  std::multiset<std::string> names;
  for (const auto& f : r.families) names.insert(f.name);
  EXPECT_EQ(names, (std::multiset<std::string>{"CP^3", "Gr2+(R5)", "V22", "V5"}));
  for (const auto& f : r.families) {
    if (f.name != "V5" && f.name != "V22") continue;
    ASSERT_EQ(f.instances.size(), 1u);
    auto want = f.name == "V5" ? v5_fixture() : v22_fixture();
    EXPECT_EQ(f.instances[0], want);
  }
}
