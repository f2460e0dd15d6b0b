#ifndef ECSS_BOUNDS_HPP
#define ECSS_BOUNDS_HPP

#include <cstdint>
#include <optional>

namespace ecss::disc {

// Closed-form discrepancy bounds for the elliptic-curve subset sum generator.
// All logarithms are natural and the implied constants are taken to be 1, so
// comparisons between these values are order-of-magnitude statements.

struct BoundInputs {
  std::uint64_t n = 1;      // number of outputs N, 1 <= N <= tau
  std::uint64_t p = 5;      // field prime
  int r = 1;                // recurrence order
  std::uint64_t tau = 1;    // period of the bit sequence
  double delta = 1.0;       // size of the exceptional set, relative to p^r
  std::optional<int> s;     // dimension (multidimensional bound only)
};

void validate(const BoundInputs& inputs);

/// delta^-1 (N^-1/2 + 3^(r/2) N^-1 p^-1/4 + p^-1/2) (log tau)^2 log p
double theorem1_rhs(const BoundInputs& inputs);

/// delta^-1 (N^-1/2 log p + p^-1/2 log p + alpha_s^(r/2) N^-1 (log p)^s) (log tau)^2, s >= 2
double theorem2_rhs(const BoundInputs& inputs);

/// delta^-1 (N^-1/2 + p^-1/4) (log tau)^2 log p
double elmahassni_rhs(const BoundInputs& inputs);

/// gamma_s = log(alpha_s) / (2 log 2).
double nontrivial_range(int s);

/// Smallest N in [1, tau] with theorem1_rhs < elmahassni_rhs (the N field of
/// `inputs` is ignored), or nullopt if there is none.
std::optional<std::uint64_t> bound_crossover(BoundInputs inputs);

}  // namespace ecss::disc

#endif  // ECSS_BOUNDS_HPP
