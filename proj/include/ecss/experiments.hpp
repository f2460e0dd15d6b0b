#ifndef ECSS_EXPERIMENTS_HPP
#define ECSS_EXPERIMENTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ecss/curve.hpp"
#include "ecss/discrepancy.hpp"
#include "ecss/gf2.hpp"
#include <json.hpp>

namespace ecss::experiments {

struct ExperimentConfig {
  ExperimentConfig(ec::CurveParams curve_, gf2::BinaryPoly poly_) : curve(curve_), poly(poly_) {}

  ec::CurveParams curve;
  gf2::BinaryPoly poly;
  std::uint64_t init_window = 1;  // u(1) = 1, remaining bits 0
  int r = 1;
  int s = 1;
  std::vector<std::uint64_t> n_grid;
  std::size_t samples = 1;
  double delta = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t mc_trials = 20000;  // boxes per Monte Carlo estimate when exact is out of reach
  std::size_t threads = 1;
};

/// Reads {curve:{p,a,b}, poly_hex, r, s, n_grid, samples, delta, seed} plus
/// the optional keys init_hex and mc_trials.
ExperimentConfig parse_config(const nlohmann::json& doc);

struct ValidatedExperiment {
  std::uint64_t tau = 0;
  std::vector<std::string> warnings;
};

/// Checks irreducibility, order, pure periodicity, distinct windows over the
/// period and the N grid range. Warns when r > sqrt(p).
ValidatedExperiment validate(const ExperimentConfig& config);

/// Independent uniform draws from E(F_p)^r. Draw i only depends on
/// (seed, i).
std::vector<ec::WeightVector> sample_weight_vectors(const ec::CurveParams& curve, int r, std::size_t count,
                                                    std::uint64_t seed);

struct SweepRow {
  std::uint64_t n = 0;
  int s = 1;
  double mean = 0.0;
  double median = 0.0;
  double q90 = 0.0;
  double theorem_bound = 0.0;     // one- or multidimensional bound by s
  double elmahassni_bound = 0.0;
  disc::DiscrepancyMethod method = disc::DiscrepancyMethod::exact;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// discrepancy[i][g]: sample i at grid entry g
  std::vector<std::vector<double>> discrepancy;
  ValidatedExperiment validation;
};

SweepResult discrepancy_sweep(const ExperimentConfig& config);

/// Least-squares slope of log(mean D) against log N.
double slope_fit(std::span<const SweepRow> rows);

/// Linear-interpolation quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

}  // namespace ecss::experiments

#endif  // ECSS_EXPERIMENTS_HPP
