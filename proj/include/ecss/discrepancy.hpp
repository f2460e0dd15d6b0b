#ifndef ECSS_DISCREPANCY_HPP
#define ECSS_DISCREPANCY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ecss/errors.hpp"
#include "ecss/point_set.hpp"

namespace ecss::disc {

// Extreme discrepancy: sup over all half-open boxes [alpha, beta) in [0,1)^s
// of |#points in box / N - volume|. Not the anchored (star) variant.

enum class DiscrepancyMethod { exact, monte_carlo_lower_bound };

std::string_view method_name(DiscrepancyMethod method);

struct DiscrepancyReport {
  Eigen::Index n = 0;
  Eigen::Index s = 0;
  double value = 0.0;
  DiscrepancyMethod method = DiscrepancyMethod::exact;
  std::chrono::duration<double> elapsed{};
};

/// Exact one-dimensional extreme discrepancy in O(N log N).
///
/// With g(t) = #{x < t}/N - t, every interval gives count/N - length =
/// g(beta) - g(alpha), so D = sup g - inf g over [0,1]. The sup is the right
/// limit at a point value v (#{x <= v}/N - v), the inf is attained at v
/// itself (#{x < v}/N - v), and g(0) = g(1) = 0.
template <typename Derived>
double extreme_discrepancy_1d(const Eigen::DenseBase<Derived>& coords) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = coords.size();
  if (n < 1) throw ValidationError("discrepancy needs at least one point");
  std::vector<Scalar> sorted(n);
  for (Eigen::Index i = 0; i < n; ++i) sorted[i] = coords.derived()(i);
  std::sort(sorted.begin(), sorted.end());
  if (!(sorted.front() >= Scalar(0)) || !(sorted.back() < Scalar(1)))
    throw ValidationError("point coordinates must lie in [0,1)");

  const double inv_n = 1.0 / static_cast<double>(n);
  double upper = 0.0;
  double lower = 0.0;
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const double v = static_cast<double>(sorted[i]);
    upper = std::max(upper, static_cast<double>(j) * inv_n - v);
    lower = std::min(lower, static_cast<double>(i) * inv_n - v);
    i = j;
  }
  return upper - lower;
}

/// s = 1 only.
DiscrepancyReport exact_extreme_1d(const PointSet& points);

inline constexpr double kExactMultiWorkLimit = 1e8;

/// True when N^(2s) <= 1e8 and s <= 3.
bool exact_multi_feasible(Eigen::Index n, Eigen::Index s);

/// Exact extreme discrepancy for s in {1, 2, 3}; s = 1 delegates to the
/// one-dimensional scan. Throws ScaleGuardError past N^(2s) <= 1e8.
DiscrepancyReport exact_extreme_multi(const PointSet& points);

/// Max of |count/N - vol| over `trials` random boxes; never exceeds the
/// exact value. Deterministic in `seed`.
DiscrepancyReport mc_box_lower_bound(const PointSet& points, std::uint64_t trials, std::uint64_t seed);

/// Exact when feasible, otherwise the Monte Carlo lower bound.
DiscrepancyReport extreme_discrepancy(const PointSet& points, std::uint64_t mc_trials, std::uint64_t seed);

}  // namespace ecss::disc

#endif  // ECSS_DISCREPANCY_HPP
