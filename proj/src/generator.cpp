#include "ecss/generator.hpp"

#include "ecss/errors.hpp"
#include "ecss/parallel.hpp"

namespace ecss::gen {

namespace {

void check_source(const std::shared_ptr<const gf2::BitSource>& source, std::size_t r) {
  if (!source) throw ValidationError("generator has no bit source");
  if (r == 0) throw ValidationError("generator needs at least one weight");
  if (const auto order = source->order(); order && static_cast<std::size_t>(*order) != r)
    throw ValidationError("weight count " + std::to_string(r) + " does not match recurrence order " +
                          std::to_string(*order));
}

void check_config(const EcGeneratorConfig& config) {
  check_source(config.source, config.weights.size());
  ec::validate_weights(config.curve, config.weights);
}

}  // namespace

std::vector<std::uint64_t> subset_sum_residue(const ResidueGeneratorConfig& config, std::uint64_t first,
                                              std::uint64_t count) {
  const auto& w = config.weights;
  check_source(config.source, w.z.size());
  if (w.modulus < 2) throw ValidationError("residue modulus must be at least 2");
  if (first < 1) throw ValidationError("sequence index starts at 1");
  const std::size_t r = w.z.size();

  auto reader = config.source->clone();
  reader->reset();
  reader->skip(first - 1);
  std::deque<std::uint8_t> window;
  for (std::size_t j = 0; j < r; ++j) window.push_back(reader->next());

  std::vector<std::uint64_t> out(count);
  for (auto& value : out) {
    unsigned __int128 sum = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (window[j]) sum += w.z[j] % w.modulus;
    value = static_cast<std::uint64_t>(sum % w.modulus);
    window.pop_front();
    window.push_back(reader->next());
  }
  return out;
}

ec::CurvePoint ec_subset_sum(const EcGeneratorConfig& config, std::uint64_t n) {
  check_config(config);
  if (n < 1) throw ValidationError("sequence index starts at 1");
  auto reader = config.source->clone();
  reader->reset();
  reader->skip(n - 1);
  ec::CurvePoint sum = ec::CurvePoint::at_infinity();
  for (const auto& weight : config.weights)
    if (reader->next()) sum = ec::add(sum, weight, config.curve);
  return sum;
}

EcSubsetSumStream::EcSubsetSumStream(const EcGeneratorConfig& config, std::uint64_t first)
    : config_(config), n_(first) {
  check_config(config);
  if (first < 1) throw ValidationError("sequence index starts at 1");
  reader_ = config_.source->clone();
  reader_->reset();
  reader_->skip(first - 1);
  for (int j = 0; j < config.order(); ++j) window_.push_back(reader_->next());
}

ec::CurvePoint EcSubsetSumStream::next() {
  ec::CurvePoint sum = ec::CurvePoint::at_infinity();
  const auto& weights = config_.weights;
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (window_[j]) sum = ec::add(sum, weights[j], config_.curve);
  window_.pop_front();
  window_.push_back(reader_->next());
  ++n_;
  return sum;
}

std::vector<ec::CurvePoint> ec_generate(const EcGeneratorConfig& config, std::uint64_t first, std::uint64_t count,
                                        std::size_t threads) {
  check_config(config);
  std::vector<ec::CurvePoint> out(count);
  constexpr std::uint64_t kMinChunk = 4096;
  const std::size_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count / kMinChunk));
  const std::uint64_t block = (count + chunks - 1) / chunks;
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = c * block;
    const std::uint64_t end = std::min(count, begin + block);
    if (begin >= end) return;
    EcSubsetSumStream stream(config, first + begin);
    for (std::uint64_t i = begin; i < end; ++i) out[i] = stream.next();
  });
  return out;
}

Eigen::VectorXd output_normalized(const EcGeneratorConfig& config, std::uint64_t count, std::size_t threads) {
  const auto points = ec_generate(config, 1, count, threads);
  const double p = static_cast<double>(config.curve.p());
  Eigen::VectorXd out(static_cast<Eigen::Index>(count));
  for (std::uint64_t n = 0; n < count; ++n) out[n] = static_cast<double>(ec::x_coord(points[n])) / p;
  return out;
}

PointSet s_tuples(const Eigen::VectorXd& seq, Eigen::Index s) {
  if (s < 1) throw ValidationError("tuple dimension must be at least 1");
  if (seq.size() < s) throw ValidationError("sequence is shorter than the tuple dimension");
  const Eigen::Index n = seq.size() - s + 1;
  PointSet::Matrix rows(n, s);
  for (Eigen::Index k = 0; k < s; ++k) rows.col(k) = seq.segment(k, n);
  return PointSet(std::move(rows));
}

}  // namespace ecss::gen
