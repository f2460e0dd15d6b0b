#ifndef ECSS_EXPSUM_HPP
#define ECSS_EXPSUM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ecss/curve.hpp"
#include "ecss/gf2.hpp"
#include "ecss/point_set.hpp"

namespace ecss::expsum {

using Complex = std::complex<double>;

struct ComplexSum {
  Complex value;
  std::size_t terms = 0;

  double abs() const { return std::abs(value); }
};

/// Integer frequency vector a = (a_0, ..., a_{s-1}).
using MultiIndex = Eigen::VectorXi;

/// |a| = max |a_v|.
int max_norm(const MultiIndex& a);
/// r(a) = prod max(|a_v|, 1).
double r_weight(const MultiIndex& a);

/// e(t) = exp(2 pi i t); t is reduced mod 1 first.
Complex unit_phase(double t);
/// e_m(z) = exp(2 pi i z / m), computed from z mod m.
Complex additive_character(std::int64_t m, std::int64_t z);

/// Pairwise (cascade) summation.
Complex pairwise_sum(std::span<const Complex> terms);

/// sum_{eta=0}^{m-1} e_m(eta * lambda).
ComplexSum orthogonality_sum(std::int64_t m, std::int64_t lambda);

/// sum_{eta=0}^{m-1} | sum_{lambda=1}^{M} e_m(eta * lambda) |, 1 <= M <= m.
double dirichlet_l1(std::int64_t m, std::int64_t M);

/// How the pole of x(c + P) at P = -c is treated.
enum class PoleHandling {
  exclude,         // drop P = -c from the sum
  x_of_infinity,   // keep it with the convention x(O) = 0
};

/// sum over P in E(F_p) of e_p(a * x(c + P)); a must be nonzero mod p.
ComplexSum curve_x_char_sum(const ec::CurveParams& curve, std::int64_t a, const ec::CurvePoint& c,
                            PoleHandling poles = PoleHandling::exclude);

/// The same sum for every a = 0, ..., p-1 at once (entry 0 is the term count).
std::vector<ComplexSum> curve_x_char_spectrum(const ec::CurveParams& curve, const ec::CurvePoint& c,
                                              PoleHandling poles = PoleHandling::exclude);

inline constexpr double kKoksmaWorkLimit = 1e8;

/// 1/L + (1/N) sum_{0 < |a| < L} r(a)^{-1} |sum_n e(a . gamma_n)|, L >= 2.
double koksma_rhs(const PointSet& points, int L);

inline constexpr double kSecondMomentWorkLimit = 1e6;

/// Average over all P in E(F_p)^r of |sum_{n=1}^N e_p(a x(V_P(n)))|^2.
/// Requires (#E)^r * N <= 10^6. a = 0 is accepted.
double avg_square_sum_over_weights(const ec::CurveParams& curve, int r, std::int64_t a, std::uint64_t N,
                                   const gf2::BitSource& source);

}  // namespace ecss::expsum

#endif  // ECSS_EXPSUM_HPP
