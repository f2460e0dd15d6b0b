#include <gtest/gtest.h>

#include <cmath>

#include "ecss/bounds.hpp"
#include "ecss/errors.hpp"

using namespace ecss;
using namespace ecss::disc;

namespace {

BoundInputs small(std::optional<int> s = std::nullopt) {
  BoundInputs in;
  in.n = 3;
  in.p = 5;
  in.r = 2;
  in.tau = 3;
  in.delta = 1.0;
  in.s = s;
  return in;
}

const double kL3 = std::log(3.0), kL5 = std::log(5.0);

}  // namespace

TEST(Bounds, OneDimensionalArithmetic) {
  const double expected =
      (1 / std::sqrt(3.0) + 3.0 / 3.0 * std::pow(5.0, -0.25) + 1 / std::sqrt(5.0)) * kL3 * kL3 * kL5;
  EXPECT_NEAR(theorem1_rhs(small()), expected, 1e-12);
  auto in = small();
  in.delta = 2.0;
  EXPECT_NEAR(theorem1_rhs(in), expected / 2, 1e-12);
}

TEST(Bounds, OneDimensionalLargeN) {
  BoundInputs in;
  in.p = 1009;
  in.r = 10;
  in.tau = 1ULL << 62;
  in.n = in.tau;
  const double limit = std::pow(1009.0, -0.5) * std::pow(std::log(double(in.tau)), 2) * std::log(1009.0);
  EXPECT_NEAR(theorem1_rhs(in) / limit, 1.0, 1e-6);
}

TEST(Bounds, MultiDimensionalArithmetic) {
  const double a2 = std::sqrt(15.0);
  const double expected =
      (kL5 / std::sqrt(3.0) + kL5 / std::sqrt(5.0) + std::pow(a2, 1.0) / 3.0 * kL5 * kL5) * kL3 * kL3;
  EXPECT_NEAR(theorem2_rhs(small(2)), expected, 1e-12);

  auto lower = small(2), higher = small(2);
  higher.r = 3;
  EXPECT_LT(theorem2_rhs(lower), theorem2_rhs(higher));
  EXPECT_LT(theorem2_rhs(small(2)), theorem2_rhs(small(3)));
  EXPECT_THROW(theorem2_rhs(small(1)), ValidationError);
  EXPECT_THROW(theorem2_rhs(small()), ValidationError);
}

TEST(Bounds, ElMahassniArithmetic) {
  const double expected = (1 / std::sqrt(3.0) + std::pow(5.0, -0.25)) * kL3 * kL3 * kL5;
  EXPECT_NEAR(elmahassni_rhs(small()), expected, 1e-12);
  auto in = small();
  in.delta = 0.5;
  EXPECT_NEAR(elmahassni_rhs(in), 2 * expected, 1e-12);
}

TEST(Bounds, DomainErrors) {
  auto in = small();
  in.n = 4;
  EXPECT_THROW(theorem1_rhs(in), ValidationError);
  in = small();
  in.delta = 0;
  EXPECT_THROW(elmahassni_rhs(in), ValidationError);
  in = small();
  in.p = 6;
  EXPECT_THROW(theorem1_rhs(in), ValidationError);
  in = small();
  in.n = 0;
  EXPECT_THROW(theorem1_rhs(in), ValidationError);
}

TEST(Bounds, Deterministic) {
  EXPECT_EQ(theorem1_rhs(small()), theorem1_rhs(small()));
  EXPECT_EQ(theorem2_rhs(small(3)), theorem2_rhs(small(3)));
}

TEST(NontrivialRange, Values) {
  EXPECT_NEAR(nontrivial_range(1), std::log(3.0) / (2 * std::log(2.0)), 1e-15);
  EXPECT_NEAR(nontrivial_range(1), 0.79248, 1e-5);
  EXPECT_NEAR(nontrivial_range(2), std::log(std::sqrt(15.0)) / (2 * std::log(2.0)), 1e-12);
  EXPECT_NEAR(nontrivial_range(2), 0.976723, 1e-6);
  for (int s = 1; s <= 10; ++s) {
    EXPECT_LT(nontrivial_range(s), 1.0);
    if (s > 1) EXPECT_GT(nontrivial_range(s), nontrivial_range(s - 1));
  }
}

TEST(Crossover, NearThreeToTheHalfR) {
  BoundInputs in;
  in.p = 65537;
  in.r = 16;
  in.tau = 65535;
  const auto cross = bound_crossover(in);
  ASSERT_TRUE(cross.has_value());
  in.n = *cross;
  EXPECT_LT(theorem1_rhs(in), elmahassni_rhs(in));
  in.n = *cross - 1;
  EXPECT_GE(theorem1_rhs(in), elmahassni_rhs(in));
  const double target = std::pow(65535.0, 0.79248);
  EXPECT_LE(double(*cross), 2 * target);
  EXPECT_GE(double(*cross), target / 2);
}
