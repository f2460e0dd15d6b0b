#include "ecss/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecss/bounds.hpp"
#include "ecss/errors.hpp"
#include "ecss/generator.hpp"
#include "ecss/parallel.hpp"
#include "ecss/rng.hpp"

namespace ecss::experiments {

namespace {

template <typename T>
T required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("experiment config is missing '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("experiment config field '") + key + "' has the wrong type");
  }
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("experiment config must be a JSON object");
  const auto curve = required<nlohmann::json>(doc, "curve");
  ExperimentConfig config(
      ec::validate_curve(required<std::int64_t>(curve, "p"), required<std::int64_t>(curve, "a"),
                         required<std::int64_t>(curve, "b")),
      gf2::BinaryPoly::from_hex(required<std::string>(doc, "poly_hex")));
  if (doc.contains("init_hex")) config.init_window = gf2::parse_hex_mask(required<std::string>(doc, "init_hex"));
  config.r = required<int>(doc, "r");
  config.s = required<int>(doc, "s");
  config.n_grid = required<std::vector<std::uint64_t>>(doc, "n_grid");
  config.samples = required<std::size_t>(doc, "samples");
  config.delta = required<double>(doc, "delta");
  config.seed = required<std::uint64_t>(doc, "seed");
  if (doc.contains("mc_trials")) config.mc_trials = required<std::uint64_t>(doc, "mc_trials");
  return config;
}

ValidatedExperiment validate(const ExperimentConfig& config) {
  if (config.r != config.poly.degree())
    throw ValidationError("r = " + std::to_string(config.r) + " does not match the polynomial degree " +
                          std::to_string(config.poly.degree()));
  if (config.s < 1) throw ValidationError("dimension s must be at least 1");
  if (config.samples < 1) throw ValidationError("sample count must be at least 1");
  if (!(config.delta > 0.0)) throw ValidationError("delta must be positive");
  if (config.n_grid.empty()) throw ValidationError("N grid is empty");
  if (!gf2::poly_is_irreducible(config.poly)) throw ValidationError("characteristic polynomial is reducible");

  const gf2::LfsrSource source(config.poly, config.init_window);
  gf2::require_purely_periodic(source);
  ValidatedExperiment out;
  out.tau = gf2::sequence_period(config.poly, config.init_window);
  if (!gf2::windows_distinct(source, config.r, out.tau))
    throw ValidationError("windows of the bit sequence are not pairwise distinct over one period");
  for (auto n : config.n_grid)
    if (n < 1 || n > out.tau) throw ValidationError("N grid entries must lie in [1, tau]");
  if (config.r * config.r > config.curve.p())
    out.warnings.push_back("r exceeds sqrt(p); the bounds assume r = O(p^(1/2))");
  return out;
}

std::vector<ec::WeightVector> sample_weight_vectors(const ec::CurveParams& curve, int r, std::size_t count,
                                                    std::uint64_t seed) {
  if (r < 1) throw ValidationError("weight count r must be at least 1");
  const auto points = ec::enumerate_points(curve);
  std::vector<ec::WeightVector> draws(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(seed, i);
    auto& weights = draws[i];
    weights.reserve(r);
    for (int j = 0; j < r; ++j) weights.push_back(points[rng.below(points.size())]);
  }
  return draws;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw ValidationError("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

SweepResult discrepancy_sweep(const ExperimentConfig& config) {
  SweepResult result;
  result.validation = validate(config);
  const auto& grid = config.n_grid;
  const std::uint64_t n_max = *std::max_element(grid.begin(), grid.end());
  const auto weights = sample_weight_vectors(config.curve, config.r, config.samples, config.seed);
  auto source = std::make_shared<const gf2::LfsrSource>(config.poly, config.init_window);

  // the method depends only on (N, s), so it is the same for every sample
  std::vector<disc::DiscrepancyMethod> methods;
  for (auto n : grid)
    methods.push_back(config.s == 1 || disc::exact_multi_feasible(static_cast<Eigen::Index>(n), config.s)
                          ? disc::DiscrepancyMethod::exact
                          : disc::DiscrepancyMethod::monte_carlo_lower_bound);

  result.discrepancy.assign(config.samples, std::vector<double>(grid.size()));
  parallel_for(config.samples, config.threads, [&](std::size_t i) {
    const gen::EcGeneratorConfig generator{source, config.curve, weights[i]};
    const Eigen::VectorXd outputs = gen::output_normalized(generator, n_max + config.s - 1);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const auto n = static_cast<Eigen::Index>(grid[g]);
      const auto points = gen::s_tuples(outputs.head(n + config.s - 1), config.s);
      const auto report = methods[g] == disc::DiscrepancyMethod::exact
                              ? disc::exact_extreme_multi(points)
                              : disc::mc_box_lower_bound(points, config.mc_trials, Rng(config.seed, i).next() + g);
      result.discrepancy[i][g] = report.value;
    }
  });

  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> column(config.samples);
    for (std::size_t i = 0; i < config.samples; ++i) column[i] = result.discrepancy[i][g];
    SweepRow row;
    row.n = grid[g];
    row.s = config.s;
    row.method = methods[g];
    // sorted before summing so the mean does not depend on sample order
    std::sort(column.begin(), column.end());
    row.mean = std::accumulate(column.begin(), column.end(), 0.0) / static_cast<double>(column.size());
    row.median = quantile(column, 0.5);
    row.q90 = quantile(column, 0.9);
    disc::BoundInputs inputs{grid[g], static_cast<std::uint64_t>(config.curve.p()), config.r,
                             result.validation.tau, config.delta, std::nullopt};
    row.elmahassni_bound = disc::elmahassni_rhs(inputs);
    if (config.s == 1) {
      row.theorem_bound = disc::theorem1_rhs(inputs);
    } else {
      inputs.s = config.s;
      row.theorem_bound = disc::theorem2_rhs(inputs);
    }
    result.rows.push_back(row);
  }
  return result;
}

double slope_fit(std::span<const SweepRow> rows) {
  if (rows.size() < 3) throw ValidationError("slope fit needs at least three rows");
  Eigen::MatrixXd design(rows.size(), 2);
  Eigen::VectorXd target(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].mean > 0.0) || rows[i].n < 1) throw ValidationError("slope fit needs positive N and mean D");
    design(i, 0) = 1.0;
    design(i, 1) = std::log(static_cast<double>(rows[i].n));
    target[i] = std::log(rows[i].mean);
  }
  return design.colPivHouseholderQr().solve(target)[1];
}

}  // namespace ecss::experiments
