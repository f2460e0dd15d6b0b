#ifndef ECSS_COMBINAT_HPP
#define ECSS_COMBINAT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Sparse>
#include <boost/multiprecision/cpp_int.hpp>

#include "ecss/spectral.hpp"

namespace ecss::combinat {

// Pairs (x, y) of binary vectors of length r. A pair is s-good when, for
// every h = 1..s, some position i has x-window = e_h and y-window = 0_s and
// some position j has x-window = 0_s and y-window = e_h; windows are the
// length-s slices starting at 0..r-s. Otherwise it is s-bad. h is 1-indexed
// throughout: e_h has its 1 in slot h-1.

using BigInt = boost::multiprecision::cpp_int;

/// (4^s - 1)^(1/s).
double alpha(int s);

bool is_s_good(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y, int s);

/// Exhaustive enumeration is limited to 4^r <= 10^8.
inline constexpr int kMaxBruteForceLength = 13;

struct BadPairCount {
  int r = 0;
  int s = 0;
  BigInt total;               // f_s(r)
  std::vector<BigInt> per_h;  // (s,h)-bad with respect to x, h = 1..s
};

BadPairCount brute_force_bad_count(int r, int s, std::size_t threads = 1);

/// Pairs with no i such that x-window(i) = e_h and y-window(i) = 0_s.
BigInt brute_force_bad_wrt_first(int r, int s, int h);

/// Adjacency of the tensor square of the span-s binary de Bruijn graph with
/// the vertex (e_h, 0_s) removed. State labels pack a window pair as
/// (x-window << s) | y-window, with slot k of a window at bit k.
struct TransferMatrix {
  int s = 0;
  int h = 0;
  Eigen::SparseMatrix<int, Eigen::RowMajor> adjacency;
  std::vector<std::uint32_t> labels;

  Eigen::Index dimension() const { return adjacency.rows(); }
};

inline constexpr int kMaxTransferSpan = 8;

TransferMatrix transfer_matrix(int s, int h);

/// 1^T M^steps 1 in exact arithmetic.
template <typename Count = BigInt>
Count walk_count(const TransferMatrix& matrix, std::uint64_t steps) {
  const auto& m = matrix.adjacency;
  std::vector<Count> current(static_cast<std::size_t>(m.rows()), Count(1));
  std::vector<Count> next(current.size());
  for (std::uint64_t step = 0; step < steps; ++step) {
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      Count sum(0);
      for (Eigen::SparseMatrix<int, Eigen::RowMajor>::InnerIterator it(m, row); it; ++it) sum += Count(it.value()) * current[it.col()];
      next[row] = std::move(sum);
    }
    current.swap(next);
  }
  Count total(0);
  for (const auto& c : current) total += c;
  return total;
}

spectral::SpectralEstimate spectral_radius(const TransferMatrix& matrix, double tolerance);

/// max over h of the spectral radius of transfer_matrix(s, h), tolerance 1e-9.
double beta(int s);

/// 2 s 4^(s-1) alpha_s^r.
double lemma3_bound(int r, int s);

struct DominantSet {
  std::vector<int> h;          // 1-indexed, ascending
  std::vector<double> radius;  // spectral radius for h = 1..s
};

/// The h attaining the largest spectral radius (ties within a relative 1e-9).
DominantSet which_h_dominates(int s);

/// max_h count_h <= f_s(r) <= 2 sum_h count_h from exact walk counts; works
/// far beyond the brute-force range.
struct BadCountSandwich {
  BigInt lower;
  BigInt upper;
};

BadCountSandwich bad_count_sandwich(int r, int s);

/// f_s(r) / beta_s^r from an exact brute-force count.
double growth_constant_fit(int r, int s);

}  // namespace ecss::combinat

#endif  // ECSS_COMBINAT_HPP
