#ifndef ECSS_SPECTRAL_HPP
#define ECSS_SPECTRAL_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ecss/errors.hpp"

namespace ecss::spectral {

enum class SpectralMethod { power_iteration, walk_ratio };

struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Some strongly connected component has cyclic period > 1, so several
  /// eigenvalues may share the maximal modulus.
  bool periodic = false;
  SpectralMethod method = SpectralMethod::power_iteration;
};

inline constexpr std::size_t kMaxIterations = 100000;

using Graph = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// lcm of the cyclic periods of the strongly connected components that carry
/// at least one edge; 0 when the graph is acyclic.
inline std::size_t cyclic_period(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.rows());
  auto edges = [&](std::size_t v, auto&& fn) {
    for (Graph::InnerIterator it(graph, static_cast<Eigen::Index>(v)); it; ++it)
      if (it.value() != 0.0) fn(static_cast<std::size_t>(it.col()));
  };

  // Tarjan, iterative.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), component(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack, roots;
  std::size_t counter = 0, components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    std::vector<std::pair<std::size_t, Graph::InnerIterator>> call;
    auto enter = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      call.emplace_back(v, Graph::InnerIterator(graph, static_cast<Eigen::Index>(v)));
    };
    enter(start);
    while (!call.empty()) {
      auto& [v, it] = call.back();
      if (it) {
        const auto w = static_cast<std::size_t>(it.col());
        const bool live = it.value() != 0.0;
        ++it;
        if (!live) continue;
        if (index[w] == kUnset) {
          enter(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != done);
        roots.push_back(done);
        ++components;
      }
    }
  }

  // Period of each component: gcd of level[u] + 1 - level[v] over internal edges.
  std::size_t period = 0;
  std::vector<long long> level(n, -1);
  for (std::size_t c = 0; c < components; ++c) {
    const std::size_t root = roots[c];
    std::vector<std::size_t> queue{root};
    level[root] = 0;
    long long g = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      edges(u, [&](std::size_t v) {
        if (component[v] != c) return;
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        } else {
          g = std::gcd(g, std::llabs(level[u] + 1 - level[v]));
        }
      });
    }
    if (g == 0) {
      // a single vertex without a self-loop, or a tree-like piece
      bool has_edge = false;
      for (std::size_t u : queue) edges(u, [&](std::size_t v) { has_edge |= component[v] == c; });
      if (!has_edge) continue;
    }
    period = period == 0 ? static_cast<std::size_t>(g) : std::lcm(period, static_cast<std::size_t>(g));
  }
  return period;
}

namespace detail {

inline SpectralEstimate walk_ratio(const Graph& a, std::size_t period, double tolerance, std::size_t max_iterations) {
  SpectralEstimate est;
  est.method = SpectralMethod::walk_ratio;
  est.periodic = period > 1;
  const std::size_t d = std::max<std::size_t>(period, 1);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(a.rows());
  double previous = -1.0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    Eigen::VectorXd y = x;
    for (std::size_t k = 0; k < d; ++k) y = a * y;
    const double total = y.sum();
    est.iterations = it;
    if (total <= 0.0) {
      est.value = 0.0;
      est.converged = true;
      return est;
    }
    est.value = std::pow(total / x.sum(), 1.0 / static_cast<double>(d));
    est.residual = std::abs(est.value - previous);
    if (est.residual < tolerance) {
      est.converged = true;
      return est;
    }
    previous = est.value;
    x = y / total;
  }
  return est;
}

}  // namespace detail

/// Dominant eigenvalue of a nonnegative square matrix.
///
/// Power iteration from the all-ones vector, stopping once successive
/// Rayleigh quotients differ by less than `tolerance`. When some strongly
/// connected component is periodic, or the iteration cap is hit, the
/// estimate falls back to the growth rate of total walk counts taken over
/// whole periods.
template <typename Scalar, int Options, typename StorageIndex>
SpectralEstimate spectral_radius(const Eigen::SparseMatrix<Scalar, Options, StorageIndex>& matrix, double tolerance,
                                 std::size_t max_iterations = kMaxIterations) {
  if (matrix.rows() != matrix.cols()) throw ValidationError("spectral radius needs a square matrix");
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  Graph a = matrix.template cast<double>();
  a.prune(0.0);
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (Graph::InnerIterator it(a, k); it; ++it)
      if (it.value() < 0.0) throw ValidationError("spectral radius estimate needs a nonnegative matrix");

  const std::size_t period = cyclic_period(a);
  if (period == 0) return {0.0, 0.0, 0, true, false, SpectralMethod::power_iteration};
  if (period > 1) return detail::walk_ratio(a, period, tolerance, max_iterations);

  SpectralEstimate est;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(a.rows()).normalized();
  double previous = 0.0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const Eigen::VectorXd y = a * x;
    const double norm = y.norm();
    est.iterations = it;
    if (norm == 0.0) {
      est.value = 0.0;
      est.converged = true;
      return est;
    }
    const double rayleigh = x.dot(y);
    if (it > 1 && std::abs(rayleigh - previous) < tolerance) {
      est.value = rayleigh;
      est.residual = (y - rayleigh * x).norm();
      est.converged = true;
      return est;
    }
    previous = rayleigh;
    x = y / norm;
  }
  return detail::walk_ratio(a, 1, tolerance, max_iterations);
}

template <typename Derived>
SpectralEstimate spectral_radius(const Eigen::MatrixBase<Derived>& matrix, double tolerance,
                                 std::size_t max_iterations = kMaxIterations) {
  const Graph sparse = matrix.template cast<double>().sparseView();
  return spectral_radius(sparse, tolerance, max_iterations);
}

}  // namespace ecss::spectral

#endif  // ECSS_SPECTRAL_HPP
