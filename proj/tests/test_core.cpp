#include <gtest/gtest.h>

#include "hamcircle/hamcircle.hpp"

using namespace hc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Precondition;
}

}  // namespace

TEST(Profile, S2xS2ProfileIsValidNotMinimal) {
  auto p = validate_profile(2, {0, 1, 1, 2});
  EXPECT_EQ(p.Np, (std::vector<int>{1, 2, 1}));
  EXPECT_FALSE(p.minimal);
}

TEST(Profile, MinimalDimensionEight) {
  auto p = validate_profile(4, {0, 1, 2, 3, 4});
  EXPECT_TRUE(p.minimal);
  EXPECT_EQ(p, minimal_profile(4));
}

TEST(Profile, UnbalancedLambdasRejected) {
  EXPECT_EQ(kind_of([] { validate_profile(3, {0, 1, 1, 3}); }), ErrorKind::BalanceViolation);
}

TEST(Profile, LambdaOutOfRangeRejected) {
  EXPECT_EQ(kind_of([] { validate_profile(2, {0, 3, 0}); }), ErrorKind::RangeViolation);
}

TEST(Profile, DerivedCountsSumToPoints) {
  for (auto l : std::vector<std::vector<int>>{{0, 1, 1, 2}, {0, 1, 2, 3}, {0, 1, 1, 2, 2, 3}}) {
    int n = l.back();
    auto p = validate_profile(n, l);
    int total = 0;
    for (int x : p.Np) total += x;
    EXPECT_EQ(total, p.points());
    EXPECT_EQ(validate_profile(p.n, p.lambdas), p);
  }
}

TEST(Structural, V5Passes) {
  auto r = weight_system_checks(v5_fixture());
  EXPECT_TRUE(r.ok());
}

TEST(Structural, ScaledWeightsFailGcdAtFirstPoint) {
  auto r = weight_system_checks(ws_from({{2, 4}, {-2, 2}, {-4, -2}}));
  EXPECT_FALSE(r.coprime);
  ASSERT_FALSE(r.gcd_failures.empty());
  EXPECT_EQ(r.gcd_failures.front(), 0);
  EXPECT_TRUE(r.pairing);
}

TEST(Structural, UnmatchedMultisetsFailPairing) {
  auto r = weight_system_checks(ws_from({{1, 2}, {-1, 1}, {-2, -2}}));
  EXPECT_FALSE(r.pairing);
}

TEST(Structural, AcceptedSystemsHaveBalancedHalves) {
  for (const auto& ws : {v5_fixture(), v22_fixture(), cp_fixture({4, 3, 2, 1, 0}), grassmannian_fixture({2, 1}),
                         s2xs2_fixture(2, 3)}) {
    ASSERT_TRUE(weight_system_checks(ws).ok());
    long pos = 0, neg = 0;
    for (const auto& w : ws.weights)
      for (const auto& x : w) (x > 0 ? pos : neg) += 1;
    long half = static_cast<long>(ws.points()) * ws.n() / 2;
    EXPECT_EQ(pos, half);
    EXPECT_EQ(neg, half);
  }
}

TEST(Structural, ZeroWeightRejected) {
  EXPECT_THROW(ws_from({{1, 0}, {-1, 1}, {-1, -1}}), Error);
}

TEST(Fixtures, ProjectivePlane) {
  auto ws = cp_fixture({2, 1, 0});
  EXPECT_EQ(ws.weights, ws_from({{1, 2}, {-1, 1}, {-2, -1}}).weights);
}

TEST(Fixtures, GrassmannianAtTwoOne) {
  auto ws = grassmannian_fixture({2, 1});
  EXPECT_EQ(ws.weights, ws_from({{1, 2, 3}, {-1, 1, 3}, {-3, -1, 1}, {-1, -2, -3}}).weights);
}

TEST(Fixtures, S2xS2Table) {
  auto ws = s2xs2_fixture(2, 3);
  EXPECT_EQ(ws.weights, ws_from({{2, 3}, {-3, 2}, {-2, 3}, {-3, -2}}).weights);
  EXPECT_EQ(ws.profile.lambdas, (std::vector<int>{0, 1, 1, 2}));
}

TEST(Fixtures, IneffectiveParametersRejected) {
  EXPECT_EQ(kind_of([] { cp_fixture({4, 2, 0}); }), ErrorKind::IneffectiveParameters);
  EXPECT_EQ(kind_of([] { s2xs2_fixture(2, 4); }), ErrorKind::IneffectiveParameters);
  EXPECT_EQ(kind_of([] { grassmannian_fixture({1, 2}); }), ErrorKind::IneffectiveParameters);
}

TEST(Json, WeightSystemRoundTrip) {
  auto ws = v22_fixture();
  EXPECT_EQ(weight_system_from_json(to_json(ws)).weights, ws.weights);
}

TEST(Json, LambdaMismatchIsSchemaError) {
  auto j = to_json(v5_fixture());
  j["points"][1]["lambda"] = 2;
  j["points"][2]["lambda"] = 1;
  EXPECT_EQ(kind_of([&] { weight_system_from_json(j); }), ErrorKind::SchemaError);
}

TEST(Json, BigIntegersSurviveAsStrings) {
  Int big("123456789012345678901234567890");
  auto ws = make_weight_system({{big}, {Int(-big)}});
  auto j = to_json(ws);
  EXPECT_TRUE(j["points"][0]["weights"][0].is_string());
  EXPECT_EQ(weight_system_from_json(j).weights[0][0], big);
}

TEST(Json, MultigraphRoundTrip) {
  auto g = make_multigraph(minimal_profile(2), {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(multigraph_from_json(to_json(g)), g);
}
