#include "ecss/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecss/bounds.hpp"
#include "ecss/combinat.hpp"
#include "ecss/curve.hpp"
#include "ecss/discrepancy.hpp"
#include "ecss/errors.hpp"
#include "ecss/experiments.hpp"
#include "ecss/expsum.hpp"
#include "ecss/generator.hpp"
#include "ecss/gf2.hpp"
#include "ecss/rng.hpp"

namespace ecss::cli {

namespace {

using nlohmann::json;

std::string version_comment(std::string_view command) {
  return "# ecss " + std::string(command) + " version " + std::to_string(kFormatVersion) + "\n";
}

std::string full_precision(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json big_to_json(const combinat::BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    auto field = line.substr(start, pos - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    fields.push_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

bool parse_double(std::string_view text, double& value) {
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return !text.empty() && ec == std::errc{} && end == text.data() + text.size();
}

// Points CSV: optional '#' comment lines, an optional header row, then one
// point per row. A header whose first column is "n" marks an index column,
// which is dropped (this is the layout `gen --s` writes).
PointSet read_points(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool header_seen = false;
  bool drop_first = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line);
    double probe;
    if (rows.empty() && !header_seen && !parse_double(fields.front(), probe)) {
      header_seen = true;
      drop_first = fields.front() == "n";
      continue;
    }
    std::vector<double> row;
    for (std::size_t k = drop_first ? 1 : 0; k < fields.size(); ++k) {
      double v;
      if (!parse_double(fields[k], v)) throw IoError("malformed number on line " + std::to_string(line_no));
      row.push_back(v);
    }
    if (row.empty() || (!rows.empty() && row.size() != rows.front().size()))
      throw IoError("inconsistent column count on line " + std::to_string(line_no));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("no points in input");
  PointSet::Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rows[i][k];
  return PointSet(std::move(m));
}

ec::WeightVector parse_weights(const std::string& text) {
  ec::WeightVector weights;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    weights.push_back(ec::parse_point(std::string_view(text).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return weights;
}

struct Options {
  std::size_t threads = 1;
  std::string output;

  std::string curve;
  std::string poly;
  std::string init = "0x1";
  std::string weights;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  int s = 0;
  bool list_points = false;

  std::string input = "-";
  std::string method = "auto";
  std::uint64_t trials = 20000;

  std::uint64_t n = 1;
  std::uint64_t p = 5;
  int r = 1;
  std::uint64_t tau = 1;
  double delta = 1.0;
  int h = 0;

  std::int64_t p_min = 101;
  std::int64_t p_max = 1000;
  std::size_t curves = 20;
  std::size_t a_samples = 20;
  std::string shift = "inf";

  std::string config;
};

std::string cmd_gen(const Options& o) {
  const auto curve = ec::parse_curve(o.curve);
  const auto poly = gf2::BinaryPoly::from_hex(o.poly);
  const auto init = gf2::parse_hex_mask(o.init);
  auto source = std::make_shared<const gf2::LfsrSource>(poly, init);
  auto weights = o.weights.empty() ? experiments::sample_weight_vectors(curve, poly.degree(), 1, o.seed).front()
                                   : parse_weights(o.weights);
  const gen::EcGeneratorConfig config{source, curve, std::move(weights)};
  if (o.count < 1) throw ValidationError("--count must be at least 1");

  std::ostringstream os;
  os << version_comment("gen");
  if (o.s < 1) {
    const auto values = gen::output_normalized(config, o.count, o.threads);
    for (double v : values) os << full_precision(v) << '\n';
    return os.str();
  }
  const auto values = gen::output_normalized(config, o.count + o.s - 1, o.threads);
  const auto tuples = gen::s_tuples(values, o.s);
  os << 'n';
  for (int k = 0; k < o.s; ++k) os << ",c" << k;
  os << '\n';
  for (Eigen::Index i = 0; i < tuples.size(); ++i) {
    os << i + 1;
    for (Eigen::Index k = 0; k < tuples.dim(); ++k) os << ',' << full_precision(tuples(i, k));
    os << '\n';
  }
  return os.str();
}

std::string cmd_curve_info(const Options& o) {
  const auto curve = ec::parse_curve(o.curve);
  const auto points = ec::enumerate_points(curve);
  const double p = static_cast<double>(curve.p());
  json doc{{"version", kFormatVersion},
           {"p", curve.p()},
           {"a", curve.a()},
           {"b", curve.b()},
           {"order", points.size()},
           {"hasse_lower", p + 1 - 2 * std::sqrt(p)},
           {"hasse_upper", p + 1 + 2 * std::sqrt(p)},
           {"hasse_ok", ec::within_hasse_interval(points.size(), curve.p())}};
  if (o.list_points) {
    json list = json::array();
    for (const auto& pt : points) list.push_back(ec::format_point(pt));
    doc["points"] = list;
  }
  return doc.dump() + "\n";
}

std::string cmd_lfsr_info(const Options& o) {
  const auto poly = gf2::BinaryPoly::from_hex(o.poly);
  const auto init = gf2::parse_hex_mask(o.init);
  const gf2::LfsrSource source(poly, init);
  const auto period = gf2::sequence_period(poly, init);
  json doc{{"version", kFormatVersion},
           {"poly", poly.to_hex()},
           {"degree", poly.degree()},
           {"irreducible", gf2::poly_is_irreducible(poly)},
           {"period", period},
           {"maximal", period == (std::uint64_t{1} << poly.degree()) - 1},
           {"windows_distinct", gf2::windows_distinct(source, poly.degree(), period)}};
  return doc.dump() + "\n";
}

std::string cmd_disc(const Options& o) {
  const auto points = read_points(read_input(o.input));
  disc::DiscrepancyReport report;
  if (o.method == "exact")
    report = disc::exact_extreme_multi(points);
  else if (o.method == "mc")
    report = disc::mc_box_lower_bound(points, o.trials, o.seed);
  else
    report = disc::extreme_discrepancy(points, o.trials, o.seed);
  json doc{{"version", kFormatVersion},
           {"n", report.n},
           {"s", report.s},
           {"value", report.value},
           {"method", disc::method_name(report.method)},
           {"elapsed_s", report.elapsed.count()}};
  return doc.dump() + "\n";
}

std::string cmd_bounds(const Options& o) {
  disc::BoundInputs in{o.n, o.p, o.r, o.tau, o.delta, std::nullopt};
  if (o.s > 0) in.s = o.s;
  json doc{{"version", kFormatVersion},
           {"N", in.n},
           {"p", in.p},
           {"r", in.r},
           {"tau", in.tau},
           {"delta", in.delta},
           {"theorem1", disc::theorem1_rhs(in)},
           {"elmahassni", disc::elmahassni_rhs(in)},
           {"log_base", "natural"},
           {"implied_constants", 1},
           {"order_of_magnitude_only", true}};
  if (const auto cross = disc::bound_crossover(in))
    doc["crossover_N"] = *cross;
  else
    doc["crossover_N"] = nullptr;
  if (o.s > 0) {
    doc["s"] = o.s;
    doc["gamma_s"] = disc::nontrivial_range(o.s);
    if (o.s >= 2) doc["theorem2"] = disc::theorem2_rhs(in);
  }
  return doc.dump() + "\n";
}

std::string cmd_badpairs(const Options& o) {
  const auto counts = combinat::brute_force_bad_count(o.r, o.s, o.threads);
  json per_h = json::array();
  for (const auto& c : counts.per_h) per_h.push_back(big_to_json(c));
  json doc{{"version", kFormatVersion},
           {"r", o.r},
           {"s", o.s},
           {"f", big_to_json(counts.total)},
           {"bound", combinat::lemma3_bound(o.r, o.s)},
           {"per_h", per_h}};
  if (o.h != 0) {
    if (o.h < 1 || o.h > o.s) throw ValidationError("--h must lie in 1..s");
    doc["h"] = o.h;
    doc["walk_count"] = big_to_json(combinat::walk_count(combinat::transfer_matrix(o.s, o.h), o.r - o.s));
  }
  return doc.dump() + "\n";
}

std::string cmd_beta(const Options& o) {
  if (o.s < 1 || o.s > combinat::kMaxTransferSpan) throw ValidationError("--s must lie in 1..8");
  const auto dominant = combinat::which_h_dominates(o.s);
  json doc{{"version", kFormatVersion},
           {"s", o.s},
           {"beta", combinat::beta(o.s)},
           {"alpha", combinat::alpha(o.s)},
           {"dominant_h", dominant.h},
           {"radius_per_h", dominant.radius}};
  return doc.dump() + "\n";
}

std::string cmd_expsum_check(const Options& o) {
  Rng rng(o.seed);
  std::vector<ec::CurveParams> curves;
  if (!o.curve.empty()) {
    curves.push_back(ec::parse_curve(o.curve));
  } else {
    if (o.p_min < 5 || o.p_max < o.p_min) throw ValidationError("need 5 <= --p-min <= --p-max");
    std::vector<std::int64_t> primes;
    for (std::int64_t q = o.p_min; q <= o.p_max; ++q)
      if (ec::is_prime(q)) primes.push_back(q);
    if (primes.empty()) throw ValidationError("no prime in [--p-min, --p-max]");
    while (curves.size() < o.curves) {
      const std::int64_t q = primes[rng.below(primes.size())];
      const auto a = static_cast<std::int64_t>(rng.below(q));
      const auto b = static_cast<std::int64_t>(rng.below(q));
      try {
        curves.push_back(ec::validate_curve(q, a, b));
      } catch (const ValidationError&) {
        // singular, draw again
      }
    }
  }

  std::ostringstream os;
  os << version_comment("expsum-check") << "p,a,abs_sum,sqrt_p,ratio\n";
  for (const auto& curve : curves) {
    const auto points = ec::enumerate_points(curve);
    ec::CurvePoint c = ec::CurvePoint::at_infinity();
    if (o.shift == "random")
      c = points[rng.below(points.size())];
    else if (o.shift != "inf")
      c = ec::parse_point(o.shift);
    const std::int64_t p = curve.p();
    std::vector<std::int64_t> as;
    if (o.a_samples == 0 || o.a_samples >= static_cast<std::size_t>(p - 1)) {
      for (std::int64_t a = 1; a < p; ++a) as.push_back(a);
    } else {
      std::set<std::int64_t> chosen;
      while (chosen.size() < o.a_samples) chosen.insert(1 + static_cast<std::int64_t>(rng.below(p - 1)));
      as.assign(chosen.begin(), chosen.end());
    }
    const double root = std::sqrt(static_cast<double>(p));
    for (auto a : as) {
      const double value = expsum::curve_x_char_sum(curve, a, c).abs();
      os << p << ',' << a << ',' << full_precision(value) << ',' << full_precision(root) << ','
         << full_precision(value / root) << '\n';
    }
  }
  return os.str();
}

std::string cmd_experiment(const Options& o) {
  json doc;
  try {
    doc = json::parse(read_input(o.config));
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed experiment config: ") + e.what());
  }
  auto config = experiments::parse_config(doc);
  config.threads = o.threads;
  const auto result = experiments::discrepancy_sweep(config);
  std::ostringstream os;
  os << version_comment("experiment");
  for (const auto& w : result.validation.warnings) os << "# warning: " << w << '\n';
  os << "N,mean,median,q90,thm_bound,elma_bound\n";
  for (const auto& row : result.rows)
    os << row.n << ',' << full_precision(row.mean) << ',' << full_precision(row.median) << ','
       << full_precision(row.q90) << ',' << full_precision(row.theorem_bound) << ','
       << full_precision(row.elmahassni_bound) << '\n';
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic-curve subset sum generator: generation, discrepancy and pattern-count tools", "ecss"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker thread cap")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", o.output, "Write the report to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Emit normalized outputs x(V_P(n))/p, or s-tuples as CSV");
  gen->add_option("--curve", o.curve, "Curve as p,a,b")->required();
  gen->add_option("--poly", o.poly, "Characteristic polynomial as a hex mask")->required();
  gen->add_option("--init", o.init, "Initial window as a hex mask, bit k = u(k+1)");
  gen->add_option("--weights", o.weights, "Weight points 'x,y;x,y;inf' (default: random from --seed)");
  gen->add_option("--seed", o.seed, "Seed for random weights");
  gen->add_option("--count", o.count, "Number of rows")->required();
  gen->add_option("--s", o.s, "Emit overlapping s-tuples as CSV");

  auto* curve_info = app.add_subcommand("curve-info", "Point count and Hasse check");
  curve_info->add_option("--curve", o.curve, "Curve as p,a,b")->required();
  curve_info->add_flag("--points", o.list_points, "List all points");

  auto* lfsr_info = app.add_subcommand("lfsr-info", "Irreducibility, period and window distinctness");
  lfsr_info->add_option("--poly", o.poly, "Characteristic polynomial as a hex mask")->required();
  lfsr_info->add_option("--init", o.init, "Initial window as a hex mask");

  auto* disc_cmd = app.add_subcommand("disc", "Extreme discrepancy of a CSV point file");
  disc_cmd->add_option("--input", o.input, "CSV file, '-' for stdin");
  disc_cmd->add_option("--method", o.method, "auto, exact or mc")->check(CLI::IsMember({"auto", "exact", "mc"}));
  disc_cmd->add_option("--trials", o.trials, "Random boxes for the Monte Carlo bound");
  disc_cmd->add_option("--seed", o.seed, "Monte Carlo seed");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the discrepancy bound expressions");
  bounds->add_option("--N", o.n, "Number of outputs")->required();
  bounds->add_option("--p", o.p, "Field prime")->required();
  bounds->add_option("--r", o.r, "Recurrence order")->required();
  bounds->add_option("--tau", o.tau, "Period")->required();
  bounds->add_option("--delta", o.delta, "Exceptional set parameter");
  bounds->add_option("--s", o.s, "Dimension");

  auto* badpairs = app.add_subcommand("badpairs", "Exact count of s-bad pairs");
  badpairs->set_help_flag("--help", "Print this help message and exit");
  badpairs->add_option("--r", o.r, "Vector length")->required();
  badpairs->add_option("--s", o.s, "Window length")->required();
  badpairs->add_option("--h", o.h, "Also report the transfer-matrix walk count for this h");

  auto* beta = app.add_subcommand("beta", "Growth constant from the transfer matrices");
  beta->add_option("--s", o.s, "Window length")->required();

  auto* expsum_check = app.add_subcommand("expsum-check", "Curve character sums against sqrt(p)");
  expsum_check->add_option("--curve", o.curve, "Single curve p,a,b (default: random curves)");
  expsum_check->add_option("--p-min", o.p_min, "Smallest prime for random curves");
  expsum_check->add_option("--p-max", o.p_max, "Largest prime for random curves");
  expsum_check->add_option("--curves", o.curves, "Number of random curves");
  expsum_check->add_option("--a-samples", o.a_samples, "Frequencies per curve, 0 for all");
  expsum_check->add_option("--c", o.shift, "Shift point: inf, random, or x,y");
  expsum_check->add_option("--seed", o.seed, "Seed");

  auto* experiment = app.add_subcommand("experiment", "Discrepancy sweep over random weight vectors");
  experiment->add_option("--config", o.config, "JSON config file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    std::string report;
    if (*gen) report = cmd_gen(o);
    else if (*curve_info) report = cmd_curve_info(o);
    else if (*lfsr_info) report = cmd_lfsr_info(o);
    else if (*disc_cmd) report = cmd_disc(o);
    else if (*bounds) report = cmd_bounds(o);
    else if (*badpairs) report = cmd_badpairs(o);
    else if (*beta) report = cmd_beta(o);
    else if (*expsum_check) report = cmd_expsum_check(o);
    else if (*experiment) report = cmd_experiment(o);

    if (o.output.empty()) {
      out << report;
    } else {
      std::ofstream file(o.output);
      if (!(file << report)) throw IoError("cannot write '" + o.output + "'");
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ScaleGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitScaleGuard;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace ecss::cli
