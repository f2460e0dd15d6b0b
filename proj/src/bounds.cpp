#include "ecss/bounds.hpp"

#include <cmath>

#include "ecss/combinat.hpp"
#include "ecss/curve.hpp"
#include "ecss/errors.hpp"

namespace ecss::disc {

void validate(const BoundInputs& in) {
  if (in.tau < 1) throw ValidationError("period tau must be positive");
  if (in.n < 1 || in.n > in.tau) throw ValidationError("bound requires 1 <= N <= tau");
  if (!(in.delta > 0.0)) throw ValidationError("delta must be positive");
  if (in.r < 1) throw ValidationError("order r must be at least 1");
  if (!ec::is_prime(in.p)) throw ValidationError("p must be prime");
  if (in.s && *in.s < 1) throw ValidationError("dimension s must be at least 1");
}

double theorem1_rhs(const BoundInputs& in) {
  validate(in);
  const double n = static_cast<double>(in.n);
  const double p = static_cast<double>(in.p);
  const double log_tau = std::log(static_cast<double>(in.tau));
  const double terms = 1.0 / std::sqrt(n) + std::pow(3.0, in.r / 2.0) / (n * std::pow(p, 0.25)) + 1.0 / std::sqrt(p);
  return terms * log_tau * log_tau * std::log(p) / in.delta;
}

double theorem2_rhs(const BoundInputs& in) {
  validate(in);
  if (!in.s || *in.s < 2) throw ValidationError("multidimensional bound needs s >= 2");
  const double n = static_cast<double>(in.n);
  const double log_p = std::log(static_cast<double>(in.p));
  const double log_tau = std::log(static_cast<double>(in.tau));
  const double terms = log_p / std::sqrt(n) + log_p / std::sqrt(static_cast<double>(in.p)) +
                       std::pow(combinat::alpha(*in.s), in.r / 2.0) / n * std::pow(log_p, *in.s);
  return terms * log_tau * log_tau / in.delta;
}

double elmahassni_rhs(const BoundInputs& in) {
  validate(in);
  const double n = static_cast<double>(in.n);
  const double p = static_cast<double>(in.p);
  const double log_tau = std::log(static_cast<double>(in.tau));
  return (1.0 / std::sqrt(n) + std::pow(p, -0.25)) * log_tau * log_tau * std::log(p) / in.delta;
}

double nontrivial_range(int s) { return std::log(combinat::alpha(s)) / (2.0 * std::log(2.0)); }

std::optional<std::uint64_t> bound_crossover(BoundInputs inputs) {
  for (std::uint64_t n = 1; n <= inputs.tau; ++n) {
    inputs.n = n;
    if (theorem1_rhs(inputs) < elmahassni_rhs(inputs)) return n;
  }
  return std::nullopt;
}

}  // namespace ecss::disc
