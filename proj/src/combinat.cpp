#include "ecss/combinat.hpp"

#include <algorithm>
#include <cmath>

#include "ecss/errors.hpp"
#include "ecss/parallel.hpp"

namespace ecss::combinat {

namespace {

void check_shape(int r, int s) {
  if (s < 1) throw ValidationError("window length s must be at least 1");
  if (r < s) throw ValidationError("vector length r must be at least s");
}

void check_brute_force(int r, int s) {
  check_shape(r, s);
  if (r > kMaxBruteForceLength) throw ScaleGuardError("exhaustive pair enumeration is limited to r <= 13");
}

// For every r-bit vector, bitmasks over window positions i = 0..r-s where the
// window equals e_h (one table per h) or 0_s.
struct WindowTables {
  std::vector<std::vector<std::uint16_t>> unit;  // unit[h-1][v]
  std::vector<std::uint16_t> zero;

  WindowTables(int r, int s) : unit(s, std::vector<std::uint16_t>(std::size_t{1} << r)), zero(std::size_t{1} << r) {
    const std::uint32_t window_mask = (1U << s) - 1;
    for (std::uint32_t v = 0; v < (1U << r); ++v) {
      for (int i = 0; i <= r - s; ++i) {
        const std::uint32_t w = (v >> i) & window_mask;
        if (w == 0) zero[v] |= 1U << i;
        else if ((w & (w - 1)) == 0) unit[std::countr_zero(w)][v] |= 1U << i;
      }
    }
  }
};

}  // namespace

double alpha(int s) {
  if (s < 1) throw ValidationError("alpha needs s >= 1");
  return std::pow(std::pow(4.0, s) - 1.0, 1.0 / s);
}

bool is_s_good(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y, int s) {
  if (x.size() != y.size()) throw ValidationError("pair vectors must have equal length");
  check_shape(static_cast<int>(x.size()), s);
  const std::size_t positions = x.size() - s + 1;
  auto window_is = [s](std::span<const std::uint8_t> v, std::size_t i, int h) {
    for (int k = 0; k < s; ++k)
      if (v[i + k] != (k == h - 1 ? 1 : 0)) return false;
    return true;
  };
  for (int h = 1; h <= s; ++h) {
    bool forward = false, backward = false;
    for (std::size_t i = 0; i < positions; ++i) {
      forward |= window_is(x, i, h) && window_is(y, i, 0);
      backward |= window_is(x, i, 0) && window_is(y, i, h);
    }
    if (!forward || !backward) return false;
  }
  return true;
}

BadPairCount brute_force_bad_count(int r, int s, std::size_t threads) {
  check_brute_force(r, s);
  const WindowTables tables(r, s);
  const std::size_t size = std::size_t{1} << r;

  // one counter row per x, merged in index order
  std::vector<std::vector<std::uint64_t>> partial(size, std::vector<std::uint64_t>(s + 1, 0));
  parallel_for(size, threads, [&](std::size_t x) {
    auto& counts = partial[x];
    for (std::size_t y = 0; y < size; ++y) {
      bool good = true;
      for (int h = 0; h < s; ++h) {
        const bool forward = tables.unit[h][x] & tables.zero[y];
        const bool backward = tables.zero[x] & tables.unit[h][y];
        if (!forward) ++counts[h + 1];
        good = good && forward && backward;
      }
      if (!good) ++counts[0];
    }
  });

  std::vector<std::uint64_t> totals(s + 1, 0);
  for (const auto& counts : partial)
    for (int k = 0; k <= s; ++k) totals[k] += counts[k];
  BadPairCount result{r, s, BigInt(totals[0]), {}};
  for (int h = 1; h <= s; ++h) result.per_h.emplace_back(totals[h]);
  return result;
}

BigInt brute_force_bad_wrt_first(int r, int s, int h) {
  check_brute_force(r, s);
  if (h < 1 || h > s) throw ValidationError("basis index h must lie in 1..s");
  const WindowTables tables(r, s);
  const std::size_t size = std::size_t{1} << r;
  const auto& unit = tables.unit[h - 1];
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if ((unit[x] & tables.zero[y]) == 0) ++count;
  return BigInt(count);
}

TransferMatrix transfer_matrix(int s, int h) {
  if (s < 1 || s > kMaxTransferSpan) throw ValidationError("transfer matrices are built for 1 <= s <= 8");
  if (h < 1 || h > s) throw ValidationError("basis index h must lie in 1..s");
  const std::uint32_t window_mask = (1U << s) - 1;
  const std::uint32_t states = 1U << (2 * s);
  const std::uint32_t forbidden = (1U << (h - 1)) << s;

  TransferMatrix m;
  m.s = s;
  m.h = h;
  std::vector<std::int32_t> index(states, -1);
  for (std::uint32_t v = 0; v < states; ++v) {
    if (v == forbidden) continue;
    index[v] = static_cast<std::int32_t>(m.labels.size());
    m.labels.push_back(v);
  }

  std::vector<Eigen::Triplet<int>> edges;
  edges.reserve(m.labels.size() * 4);
  for (const std::uint32_t v : m.labels) {
    const std::uint32_t wx = v >> s;
    const std::uint32_t wy = v & window_mask;
    for (std::uint32_t bx = 0; bx < 2; ++bx) {
      for (std::uint32_t by = 0; by < 2; ++by) {
        const std::uint32_t nx = (wx >> 1) | (bx << (s - 1));
        const std::uint32_t ny = (wy >> 1) | (by << (s - 1));
        const std::int32_t target = index[(nx << s) | ny];
        if (target >= 0) edges.emplace_back(index[v], target, 1);
      }
    }
  }
  const auto dim = static_cast<Eigen::Index>(m.labels.size());
  m.adjacency.resize(dim, dim);
  m.adjacency.setFromTriplets(edges.begin(), edges.end());
  return m;
}

spectral::SpectralEstimate spectral_radius(const TransferMatrix& matrix, double tolerance) {
  return spectral::spectral_radius(matrix.adjacency, tolerance);
}

double beta(int s) {
  double best = 0.0;
  for (int h = 1; h <= s; ++h) best = std::max(best, spectral_radius(transfer_matrix(s, h), 1e-9).value);
  return best;
}

double lemma3_bound(int r, int s) {
  check_shape(r, s);
  return 2.0 * s * std::pow(4.0, s - 1) * std::pow(alpha(s), r);
}

DominantSet which_h_dominates(int s) {
  DominantSet result;
  for (int h = 1; h <= s; ++h) result.radius.push_back(spectral_radius(transfer_matrix(s, h), 1e-13).value);
  const double best = *std::max_element(result.radius.begin(), result.radius.end());
  for (int h = 1; h <= s; ++h)
    if (result.radius[h - 1] >= best * (1.0 - 1e-9)) result.h.push_back(h);
  return result;
}

BadCountSandwich bad_count_sandwich(int r, int s) {
  check_shape(r, s);
  BadCountSandwich result{BigInt(0), BigInt(0)};
  for (int h = 1; h <= s; ++h) {
    const BigInt count = walk_count(transfer_matrix(s, h), static_cast<std::uint64_t>(r - s));
    result.lower = std::max(result.lower, count);
    result.upper += 2 * count;
  }
  return result;
}

double growth_constant_fit(int r, int s) {
  const auto count = brute_force_bad_count(r, s);
  return count.total.convert_to<double>() / std::pow(beta(s), r);
}

}  // namespace ecss::combinat
