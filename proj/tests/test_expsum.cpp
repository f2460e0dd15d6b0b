#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ecss/discrepancy.hpp"
#include "ecss/errors.hpp"
#include "ecss/expsum.hpp"
#include "ecss/rng.hpp"

using namespace ecss;
using namespace ecss::expsum;
using ec::CurvePoint;

namespace {

constexpr double kPi = std::numbers::pi;

Complex e(double t) { return {std::cos(2 * kPi * t), std::sin(2 * kPi * t)}; }

}  // namespace

TEST(Characters, Examples) {
  EXPECT_NEAR(std::abs(additive_character(4, 0) - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(additive_character(4, 1) - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(additive_character(2, 1) - Complex(-1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(additive_character(7, -3) - additive_character(7, 4)), 0.0, 1e-15);
  EXPECT_THROW(additive_character(0, 1), ValidationError);
}

TEST(Characters, NormsAndWeights) {
  Eigen::VectorXi a(3);
  a << 2, -5, 0;
  EXPECT_EQ(max_norm(a), 5);
  EXPECT_EQ(r_weight(a), 10.0);
}

TEST(Orthogonality, Examples) {
  EXPECT_NEAR(orthogonality_sum(4, 2).abs(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(orthogonality_sum(4, 8).value - Complex(4, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(orthogonality_sum(1, 17).value - Complex(1, 0)), 0.0, 1e-12);
}

TEST(Orthogonality, AllSmallModuli) {
  for (std::int64_t m = 1; m <= 64; ++m)
    for (std::int64_t lambda = -2 * m; lambda <= 2 * m; ++lambda) {
      const Complex expected = lambda % m == 0 ? Complex(double(m), 0) : Complex(0, 0);
      ASSERT_NEAR(std::abs(orthogonality_sum(m, lambda).value - expected), 0.0, 1e-12) << m << " " << lambda;
    }
}

TEST(Dirichlet, Examples) {
  EXPECT_NEAR(dirichlet_l1(16, 16), 16.0, 1e-9);
  EXPECT_NEAR(dirichlet_l1(2, 1), 2.0, 1e-12);
  EXPECT_LE(dirichlet_l1(16, 8), 4 * 16 * std::log(17.0));
  EXPECT_THROW(dirichlet_l1(16, 0), ValidationError);
  EXPECT_THROW(dirichlet_l1(16, 17), ValidationError);
}

// |sum_{l=1}^M e_m(eta l)| = |sin(pi M eta / m) / sin(pi eta / m)| for eta != 0.
TEST(Dirichlet, MatchesClosedForm) {
  for (std::int64_t m : {3, 16, 97, 256}) {
    for (std::int64_t M : {std::int64_t{1}, m / 3 + 1, m / 2, m}) {
      double expected = static_cast<double>(M);
      for (std::int64_t eta = 1; eta < m; ++eta)
        expected += std::abs(std::sin(kPi * M * eta / m) / std::sin(kPi * eta / m));
      ASSERT_NEAR(dirichlet_l1(m, M), expected, 1e-9 * m) << m << " " << M;
    }
  }
}

TEST(CurveCharSum, NineTermExample) {
  const auto c = ec::validate_curve(5, 1, 1);
  Complex direct(0, 0);
  for (const auto& P : ec::enumerate_points(c)) direct += e(double(ec::x_coord(P)) / 5.0);
  const auto with_pole = curve_x_char_sum(c, 1, CurvePoint::at_infinity(), PoleHandling::x_of_infinity);
  EXPECT_EQ(with_pole.terms, 9U);
  EXPECT_NEAR(std::abs(with_pole.value - direct), 0.0, 1e-12);
  EXPECT_LE(with_pole.abs(), 5 * std::sqrt(5.0));

  const auto excluded = curve_x_char_sum(c, 1, CurvePoint::at_infinity());
  EXPECT_EQ(excluded.terms, 8U);
  EXPECT_NEAR(std::abs(excluded.value - (direct - Complex(1, 0))), 0.0, 1e-12);
}

TEST(CurveCharSum, ShiftedSumMatchesDirect) {
  const auto c = ec::validate_curve(101, 3, 7);
  const auto pts = ec::enumerate_points(c);
  for (std::size_t ci : {std::size_t{0}, std::size_t{3}, std::size_t{50}}) {
    const auto shift = pts[ci];
    for (std::int64_t a : {1, 2, 50, 100}) {
      Complex direct(0, 0);
      for (const auto& P : pts) {
        if (ec::add(shift, P, c).is_infinity()) continue;
        direct += e(double(a * ec::x_coord(ec::add(shift, P, c)) % 101) / 101.0);
      }
      const auto got = curve_x_char_sum(c, a, shift);
      EXPECT_EQ(got.terms, pts.size() - 1);
      EXPECT_NEAR(std::abs(got.value - direct), 0.0, 1e-9);
    }
  }
}

TEST(CurveCharSum, ConjugateSymmetryAndSpectrum) {
  const auto c = ec::validate_curve(211, 5, 9);
  const auto pts = ec::enumerate_points(c);
  const auto shift = pts[7];
  const auto spectrum = curve_x_char_spectrum(c, shift);
  ASSERT_EQ(spectrum.size(), 211U);
  for (std::int64_t a = 1; a < 211; ++a) {
    const auto s = curve_x_char_sum(c, a, shift);
    const auto t = curve_x_char_sum(c, -a, shift);
    ASSERT_NEAR(std::abs(s.value - std::conj(t.value)), 0.0, 1e-9);
    ASSERT_NEAR(std::abs(s.value - spectrum[a].value), 0.0, 1e-9);
    ASSERT_LE(s.abs(), 5 * std::sqrt(211.0));
  }
}

TEST(CurveCharSum, Errors) {
  const auto c = ec::validate_curve(5, 1, 1);
  EXPECT_THROW(curve_x_char_sum(c, 0, CurvePoint::at_infinity()), ValidationError);
  EXPECT_THROW(curve_x_char_sum(c, 10, CurvePoint::at_infinity()), ValidationError);
  EXPECT_THROW(curve_x_char_sum(c, 1, CurvePoint::affine(1, 1)), ValidationError);
}

TEST(Koksma, Examples) {
  Eigen::VectorXd one(1);
  one << 0.5;
  EXPECT_NEAR(koksma_rhs(PointSet::from_column(one), 2), 2.5, 1e-12);
  EXPECT_NEAR(koksma_rhs(PointSet::from_column(Eigen::VectorXd::Zero(7)), 2), 2.5, 1e-12);
  EXPECT_THROW(koksma_rhs(PointSet::from_column(one), 1), ValidationError);
}

TEST(Koksma, EquidistantSetBoundsDiscrepancy) {
  for (int n : {4, 16, 64, 200}) {
    const Eigen::VectorXd pts = Eigen::VectorXd::LinSpaced(n, 0, n - 1) / n;
    const auto set = PointSet::from_column(pts);
    const double rhs = koksma_rhs(set, n);
    // every nonzero frequency below N sums to zero over the full residue system
    EXPECT_NEAR(rhs, 1.0 / n, 1e-9);
    EXPECT_GE(rhs + 1e-12, disc::exact_extreme_1d(set).value);
    EXPECT_LE(rhs, std::log(double(n)) / n);
  }
}

TEST(Koksma, DominatesDiscrepancyUpToConstant) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int s = 1 + trial % 2;
    const int n = 5 + static_cast<int>(rng.below(20));
    RowMatrix<double> rows(n, s);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < s; ++k) rows(i, k) = rng.uniform();
    const PointSet set(rows);
    const double d = disc::exact_extreme_multi(set).value;
    EXPECT_LE(d, 10 * koksma_rhs(set, 16));
  }
}

TEST(Koksma, ScaleGuard) {
  const PointSet set(RowMatrix<double>::Zero(1000, 3));
  EXPECT_THROW(koksma_rhs(set, 100), ScaleGuardError);
}

TEST(SecondMoment, Examples) {
  const auto c = ec::validate_curve(5, 1, 1);
  const gf2::LfsrSource source(gf2::BinaryPoly(0b111), 0b01);
  EXPECT_NEAR(avg_square_sum_over_weights(c, 2, 1, 1, source), 1.0, 1e-12);
  EXPECT_NEAR(avg_square_sum_over_weights(c, 2, 0, 3, source), 9.0, 1e-9);
  const double v = avg_square_sum_over_weights(c, 2, 1, 3, source);
  EXPECT_GE(v, 0.0);
  EXPECT_LE(v, 5 * (3 + 9 / std::sqrt(5.0)));
}

// Expanding |S|^2 into pairs (n, n') and averaging each pair separately.
TEST(SecondMoment, MatchesPairExpansion) {
  const auto c = ec::validate_curve(7, 3, 2);
  const auto pts = ec::enumerate_points(c);
  const gf2::LfsrSource source(gf2::BinaryPoly(0b1011), 0b001);
  const int N = 5;
  const auto bits = gf2::generate_bits(source, N + 3);
  auto vx = [&](const ec::WeightVector& w, int n) {
    CurvePoint acc = CurvePoint::at_infinity();
    for (int j = 0; j < 3; ++j)
      if (bits[n + j]) acc = ec::add(acc, w[j], c);
    return ec::x_coord(acc);
  };
  Complex total(0, 0);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      Complex pair(0, 0);
      for (const auto& a : pts)
        for (const auto& b : pts)
          for (const auto& d : pts) {
            const ec::WeightVector w{a, b, d};
            pair += e(double(2 * (vx(w, n) - vx(w, m)) % 7 + 7) / 7.0);
          }
      total += pair / double(pts.size() * pts.size() * pts.size());
    }
  EXPECT_NEAR(avg_square_sum_over_weights(c, 3, 2, N, source), total.real(), 1e-9);
  EXPECT_NEAR(total.imag(), 0.0, 1e-9);
}
