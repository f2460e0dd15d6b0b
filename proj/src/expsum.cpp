#include "ecss/expsum.hpp"

#include <cmath>
#include <numbers>

#include "ecss/errors.hpp"

namespace ecss::expsum {

namespace {

std::int64_t reduce(std::int64_t z, std::int64_t m) {
  const std::int64_t r = z % m;
  return r < 0 ? r + m : r;
}

std::vector<Complex> twiddles(std::int64_t m) {
  std::vector<Complex> table(m);
  for (std::int64_t k = 0; k < m; ++k) table[k] = additive_character(m, k);
  return table;
}

}  // namespace

int max_norm(const MultiIndex& a) { return a.size() == 0 ? 0 : a.cwiseAbs().maxCoeff(); }

double r_weight(const MultiIndex& a) { return a.cwiseAbs().cwiseMax(1).cast<double>().prod(); }

Complex unit_phase(double t) {
  const double frac = t - std::floor(t);
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

Complex additive_character(std::int64_t m, std::int64_t z) {
  if (m < 1) throw ValidationError("character modulus must be positive");
  const std::int64_t k = reduce(z, m);
  // exact values on the axes
  if (k == 0) return {1.0, 0.0};
  if (2 * k == m) return {-1.0, 0.0};
  if (4 * k == m) return {0.0, 1.0};
  if (4 * k == 3 * m) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

Complex pairwise_sum(std::span<const Complex> terms) {
  constexpr std::size_t kBlock = 64;
  if (terms.size() <= kBlock) {
    Complex sum{};
    for (const auto& t : terms) sum += t;
    return sum;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

ComplexSum orthogonality_sum(std::int64_t m, std::int64_t lambda) {
  if (m < 1) throw ValidationError("character modulus must be positive");
  const std::int64_t step = reduce(lambda, m);
  std::vector<Complex> terms(m);
  std::int64_t k = 0;
  for (auto& t : terms) {
    t = additive_character(m, k);
    k = (k + step) % m;
  }
  return {pairwise_sum(terms), terms.size()};
}

double dirichlet_l1(std::int64_t m, std::int64_t M) {
  if (m < 1) throw ValidationError("character modulus must be positive");
  if (M < 1 || M > m) throw ValidationError("dirichlet_l1 requires 1 <= M <= m");
  const auto table = twiddles(m);
  std::vector<Complex> inner(M);
  std::vector<double> moduli(m);
  for (std::int64_t eta = 0; eta < m; ++eta) {
    std::int64_t k = 0;
    for (auto& t : inner) {
      k = (k + eta) % m;
      t = table[k];
    }
    moduli[eta] = std::abs(pairwise_sum(inner));
  }
  double total = 0.0;
  for (double v : moduli) total += v;
  return total;
}

ComplexSum curve_x_char_sum(const ec::CurveParams& curve, std::int64_t a, const ec::CurvePoint& c,
                            PoleHandling poles) {
  const std::int64_t p = curve.p();
  if (reduce(a, p) == 0) throw ValidationError("character sum needs a nonzero mod p");
  if (!ec::on_curve(curve, c)) throw ValidationError("shift point is not on the curve");
  std::vector<Complex> terms;
  for (const auto& point : ec::enumerate_points(curve)) {
    const auto shifted = ec::add(c, point, curve);
    if (shifted.is_infinity() && poles == PoleHandling::exclude) continue;
    terms.push_back(additive_character(p, ec::mod_mul(reduce(a, p), ec::x_coord(shifted), p)));
  }
  return {pairwise_sum(terms), terms.size()};
}

std::vector<ComplexSum> curve_x_char_spectrum(const ec::CurveParams& curve, const ec::CurvePoint& c,
                                              PoleHandling poles) {
  const std::int64_t p = curve.p();
  if (!ec::on_curve(curve, c)) throw ValidationError("shift point is not on the curve");
  std::vector<std::uint32_t> histogram(p, 0);
  std::size_t terms = 0;
  for (const auto& point : ec::enumerate_points(curve)) {
    const auto shifted = ec::add(c, point, curve);
    if (shifted.is_infinity() && poles == PoleHandling::exclude) continue;
    ++histogram[ec::x_coord(shifted)];
    ++terms;
  }
  const auto table = twiddles(p);
  std::vector<ComplexSum> out(p);
  std::vector<Complex> buffer;
  buffer.reserve(p);
  for (std::int64_t a = 0; a < p; ++a) {
    buffer.clear();
    std::int64_t k = 0;
    for (std::int64_t x = 0; x < p; ++x, k = (k + a) % p)
      if (histogram[x] != 0) buffer.push_back(static_cast<double>(histogram[x]) * table[k]);
    out[a] = {pairwise_sum(buffer), terms};
  }
  return out;
}

double koksma_rhs(const PointSet& points, int L) {
  if (L < 2) throw ValidationError("Koksma bound needs L >= 2");
  const Eigen::Index s = points.dim();
  const Eigen::Index n = points.size();
  if (std::pow(2.0 * L, static_cast<double>(s)) * static_cast<double>(n) > kKoksmaWorkLimit)
    throw ScaleGuardError("Koksma enumeration exceeds (2L)^s * N <= 1e8");

  // Odometer over a in {-(L-1), ..., L-1}^s.
  MultiIndex a = MultiIndex::Constant(s, -(L - 1));
  std::vector<Complex> terms(n);
  double weighted = 0.0;
  while (true) {
    if (max_norm(a) != 0) {
      const Eigen::VectorXd phases = points.rows() * a.cast<double>();
      for (Eigen::Index i = 0; i < n; ++i) terms[i] = unit_phase(phases[i]);
      weighted += std::abs(pairwise_sum(terms)) / r_weight(a);
    }
    Eigen::Index k = 0;
    while (k < s && a[k] == L - 1) a[k++] = -(L - 1);
    if (k == s) break;
    ++a[k];
  }
  return 1.0 / L + weighted / static_cast<double>(n);
}

double avg_square_sum_over_weights(const ec::CurveParams& curve, int r, std::int64_t a, std::uint64_t N,
                                   const gf2::BitSource& source) {
  if (r < 1) throw ValidationError("weight count r must be at least 1");
  if (N < 1) throw ValidationError("sum length N must be at least 1");
  if (const auto order = source.order(); order && *order != r)
    throw ValidationError("weight count does not match recurrence order");
  const std::int64_t p = curve.p();
  if (std::pow(static_cast<double>(ec::point_count(curve)), r) * static_cast<double>(N) > kSecondMomentWorkLimit)
    throw ScaleGuardError("exhaustive weight average exceeds (#E)^r * N <= 1e6");

  const auto points = ec::enumerate_points(curve);
  const auto bits = gf2::generate_bits(source, N + r - 1);
  const auto table = twiddles(p);
  const std::int64_t a_mod = reduce(a, p);

  std::vector<std::size_t> index(r, 0);
  std::vector<Complex> terms(N);
  double total = 0.0;
  std::uint64_t count = 0;
  while (true) {
    for (std::uint64_t n = 0; n < N; ++n) {
      ec::CurvePoint v = ec::CurvePoint::at_infinity();
      for (int j = 0; j < r; ++j)
        if (bits[n + j]) v = ec::add(v, points[index[j]], curve);
      terms[n] = table[ec::mod_mul(a_mod, ec::x_coord(v), p)];
    }
    total += std::norm(pairwise_sum(terms));
    ++count;
    int j = 0;
    while (j < r && index[j] + 1 == points.size()) index[j++] = 0;
    if (j == r) break;
    ++index[j];
  }
  return total / static_cast<double>(count);
}

}  // namespace ecss::expsum
