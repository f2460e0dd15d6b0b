#ifndef ECSS_GENERATOR_HPP
#define ECSS_GENERATOR_HPP

#include <cstdint>
#include <deque>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "ecss/curve.hpp"
#include "ecss/gf2.hpp"
#include "ecss/point_set.hpp"

namespace ecss::gen {

/// Weights z_0..z_{r-1} in Z_m.
struct ResidueWeights {
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> z;
};

struct ResidueGeneratorConfig {
  std::shared_ptr<const gf2::BitSource> source;
  ResidueWeights weights;
};

/// Bit source, curve and weight points feeding V_P(n) = sum_j u(n+j) P_j.
struct EcGeneratorConfig {
  std::shared_ptr<const gf2::BitSource> source;
  ec::CurveParams curve;
  ec::WeightVector weights;

  int order() const { return static_cast<int>(weights.size()); }
};

/// sum_{j<r} u(n+j) z_j mod m for n = first, ..., first + count - 1.
std::vector<std::uint64_t> subset_sum_residue(const ResidueGeneratorConfig& config, std::uint64_t first,
                                              std::uint64_t count);

/// V_P(n), recomputed from u(n..n+r-1).
ec::CurvePoint ec_subset_sum(const EcGeneratorConfig& config, std::uint64_t n);

/// Streams V_P(first), V_P(first+1), ... from a private clone of the source.
/// Each step costs at most r - 1 group additions.
class EcSubsetSumStream {
 public:
  explicit EcSubsetSumStream(const EcGeneratorConfig& config, std::uint64_t first = 1);

  ec::CurvePoint next();
  std::uint64_t position() const { return n_; }

 private:
  EcGeneratorConfig config_;
  std::unique_ptr<gf2::BitSource> reader_;
  std::deque<std::uint8_t> window_;
  std::uint64_t n_;
};

/// V_P(first .. first+count-1). With threads > 1 the range is split across
/// workers, each fast-forwarding its own clone; the result is identical to a
/// sequential run.
std::vector<ec::CurvePoint> ec_generate(const EcGeneratorConfig& config, std::uint64_t first, std::uint64_t count,
                                        std::size_t threads = 1);

/// x(V_P(n)) / p for n = 1..count.
Eigen::VectorXd output_normalized(const EcGeneratorConfig& config, std::uint64_t count, std::size_t threads = 1);

/// Overlapping windows: row n is (seq[n], ..., seq[n+s-1]).
PointSet s_tuples(const Eigen::VectorXd& seq, Eigen::Index s);

}  // namespace ecss::gen

#endif  // ECSS_GENERATOR_HPP
