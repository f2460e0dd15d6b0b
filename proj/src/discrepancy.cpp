#include "ecss/discrepancy.hpp"

#include <array>
#include <cmath>

#include "ecss/rng.hpp"

namespace ecss::disc {

namespace {

using Clock = std::chrono::steady_clock;

// A candidate side [lo, hi) in rank space together with its Euclidean
// length. Ranks index the sorted distinct values of one axis.
struct Side {
  std::int32_t lo;
  std::int32_t hi;
  double length;
};

struct Axis {
  std::vector<double> values;        // sorted distinct coordinates
  std::vector<std::int32_t> rank;    // rank of each point's coordinate
};

Axis make_axis(const PointSet& points, Eigen::Index k) {
  Axis axis;
  const auto col = points.rows().col(k);
  axis.values.assign(col.begin(), col.end());
  std::sort(axis.values.begin(), axis.values.end());
  axis.values.erase(std::unique(axis.values.begin(), axis.values.end()), axis.values.end());
  axis.rank.resize(col.size());
  for (Eigen::Index i = 0; i < col.size(); ++i)
    axis.rank[i] = static_cast<std::int32_t>(
        std::lower_bound(axis.values.begin(), axis.values.end(), col[i]) - axis.values.begin());
  return axis;
}

// Sides for maximizing count/N - vol: shrink every face onto a point, so
// alpha = v_a (closed) and beta -> v_b from above.
std::vector<Side> overcount_sides(const Axis& axis) {
  const auto k = static_cast<std::int32_t>(axis.values.size());
  std::vector<Side> sides;
  sides.reserve(static_cast<std::size_t>(k) * (k + 1) / 2);
  for (std::int32_t a = 0; a < k; ++a)
    for (std::int32_t b = a; b < k; ++b) sides.push_back({a, b + 1, axis.values[b] - axis.values[a]});
  return sides;
}

// Sides for maximizing vol - count/N: grow every face until it meets a point
// or the cube, so alpha is 0 or v_a from above and beta is v_b or 1.
std::vector<Side> undercount_sides(const Axis& axis) {
  const auto k = static_cast<std::int32_t>(axis.values.size());
  std::vector<std::pair<double, std::int32_t>> lowers{{0.0, 0}};
  for (std::int32_t a = 0; a < k; ++a) lowers.emplace_back(axis.values[a], a + 1);
  std::vector<std::pair<double, std::int32_t>> uppers{{1.0, k}};
  for (std::int32_t b = 0; b < k; ++b) uppers.emplace_back(axis.values[b], b);
  std::vector<Side> sides;
  for (const auto& [lo_value, lo_rank] : lowers)
    for (const auto& [hi_value, hi_rank] : uppers)
      if (lo_value <= hi_value) sides.push_back({lo_rank, std::max(lo_rank, hi_rank), hi_value - lo_value});
  return sides;
}

// Cumulative counts over the rank grid: cell (i0, i1, ...) holds the number of
// points whose ranks are all strictly below (i0, i1, ...).
class RankGrid {
 public:
  RankGrid(const std::vector<Axis>& axes, Eigen::Index n) : s_(axes.size()) {
    std::size_t size = 1;
    for (std::size_t k = 0; k < s_; ++k) {
      extent_[k] = axes[k].values.size() + 1;
      size *= extent_[k];
    }
    stride_[s_ - 1] = 1;
    for (std::size_t k = s_ - 1; k > 0; --k) stride_[k - 1] = stride_[k] * extent_[k];
    cells_.assign(size, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      std::size_t offset = 0;
      for (std::size_t k = 0; k < s_; ++k) offset += (axes[k].rank[i] + 1) * stride_[k];
      ++cells_[offset];
    }
    for (std::size_t k = 0; k < s_; ++k)
      for (std::size_t c = 0; c < cells_.size(); ++c)
        if ((c / stride_[k]) % extent_[k] != 0) cells_[c] += cells_[c - stride_[k]];
  }

  std::int32_t count(const std::array<const Side*, 3>& box) const {
    std::int32_t total = 0;
    for (std::size_t corner = 0; corner < (std::size_t{1} << s_); ++corner) {
      std::size_t offset = 0;
      int sign = 1;
      for (std::size_t k = 0; k < s_; ++k) {
        if ((corner >> k) & 1U) {
          offset += box[k]->lo * stride_[k];
          sign = -sign;
        } else {
          offset += box[k]->hi * stride_[k];
        }
      }
      total += sign * cells_[offset];
    }
    return total;
  }

 private:
  std::size_t s_;
  std::array<std::size_t, 3> extent_{};
  std::array<std::size_t, 3> stride_{};
  std::vector<std::int32_t> cells_;
};

// max over boxes (one side per axis) of sign * (count/N - vol)
double best_box(const RankGrid& grid, const std::vector<std::vector<Side>>& sides, double inv_n, double sign) {
  const std::size_t s = sides.size();
  std::array<const Side*, 3> box{};
  double best = 0.0;
  auto visit = [&](auto&& self, std::size_t k, double volume) -> void {
    if (k == s) {
      best = std::max(best, sign * (grid.count(box) * inv_n - volume));
      return;
    }
    for (const auto& side : sides[k]) {
      box[k] = &side;
      self(self, k + 1, volume * side.length);
    }
  };
  visit(visit, 0, 1.0);
  return best;
}

}  // namespace

std::string_view method_name(DiscrepancyMethod method) {
  return method == DiscrepancyMethod::exact ? "exact" : "monte-carlo-lower-bound";
}

DiscrepancyReport exact_extreme_1d(const PointSet& points) {
  if (points.dim() != 1) throw ValidationError("exact_extreme_1d needs a one-dimensional point set");
  const auto start = Clock::now();
  const double value = extreme_discrepancy_1d(points.rows().col(0));
  return {points.size(), 1, value, DiscrepancyMethod::exact, Clock::now() - start};
}

bool exact_multi_feasible(Eigen::Index n, Eigen::Index s) {
  if (s < 1 || s > 3) return false;
  return std::pow(static_cast<double>(n), 2.0 * static_cast<double>(s)) <= kExactMultiWorkLimit;
}

DiscrepancyReport exact_extreme_multi(const PointSet& points) {
  const Eigen::Index s = points.dim();
  if (s == 1) return exact_extreme_1d(points);
  if (s > 3) throw ValidationError("exact discrepancy is implemented for s <= 3");
  if (!exact_multi_feasible(points.size(), s)) throw ScaleGuardError("exact discrepancy exceeds N^(2s) <= 1e8");

  const auto start = Clock::now();
  std::vector<Axis> axes;
  for (Eigen::Index k = 0; k < s; ++k) axes.push_back(make_axis(points, k));
  const RankGrid grid(axes, points.size());
  std::vector<std::vector<Side>> over, under;
  for (const auto& axis : axes) {
    over.push_back(overcount_sides(axis));
    under.push_back(undercount_sides(axis));
  }
  const double inv_n = 1.0 / static_cast<double>(points.size());
  const double value = std::max(best_box(grid, over, inv_n, 1.0), best_box(grid, under, inv_n, -1.0));
  return {points.size(), s, value, DiscrepancyMethod::exact, Clock::now() - start};
}

DiscrepancyReport mc_box_lower_bound(const PointSet& points, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("Monte Carlo discrepancy needs at least one trial");
  const auto start = Clock::now();
  const Eigen::Index s = points.dim();
  const Eigen::Index n = points.size();
  const auto& rows = points.rows();
  Rng rng(seed);
  Eigen::VectorXd lo(s), hi(s);
  double best = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    double volume = 1.0;
    for (Eigen::Index k = 0; k < s; ++k) {
      const double u = rng.uniform();
      const double v = rng.uniform();
      lo[k] = std::min(u, v);
      hi[k] = std::max(u, v);
      volume *= hi[k] - lo[k];
    }
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto row = rows.row(i).transpose();
      count += ((row.array() >= lo.array()) && (row.array() < hi.array())).all();
    }
    best = std::max(best, std::abs(static_cast<double>(count) / static_cast<double>(n) - volume));
  }
  return {n, s, best, DiscrepancyMethod::monte_carlo_lower_bound, Clock::now() - start};
}

DiscrepancyReport extreme_discrepancy(const PointSet& points, std::uint64_t mc_trials, std::uint64_t seed) {
  if (exact_multi_feasible(points.size(), points.dim()) || points.dim() == 1) return exact_extreme_multi(points);
  return mc_box_lower_bound(points, mc_trials, seed);
}

}  // namespace ecss::disc
