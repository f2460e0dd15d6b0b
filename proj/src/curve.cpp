#include "ecss/curve.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <utility>

#include "ecss/errors.hpp"

namespace ecss::ec {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw ValidationError("malformed integer: '" + std::string(text) + "'");
  return value;
}

// QR table: root[v] is some y with y^2 = v, or -1.
std::vector<std::int32_t> square_roots(Field p) {
  std::vector<std::int32_t> root(p, -1);
  for (Field y = 0; y <= p / 2; ++y) root[mod_mul(y, y, p)] = static_cast<std::int32_t>(y);
  return root;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field mod_pow(Field base, std::uint64_t exp, Field p) {
  Field result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

Field mod_inverse(Field a, Field p) {
  Field t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const Field q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ValidationError("element is not invertible");
  return t < 0 ? t + p : t;
}

CurveParams validate_curve(std::int64_t p, std::int64_t a, std::int64_t b) {
  if (p <= 3) throw ValidationError("curve modulus must exceed 3");
  if (p >= (std::int64_t{1} << 31)) throw ValidationError("curve modulus must be below 2^31");
  if (!is_prime(static_cast<std::uint64_t>(p))) throw ValidationError("curve modulus " + std::to_string(p) + " is not prime");
  if (a < 0 || a >= p || b < 0 || b >= p) throw ValidationError("curve coefficients must lie in {0, ..., p-1}");
  const Field disc = (4 * mod_mul(mod_mul(a, a, p), a, p) + 27 * mod_mul(b, b, p)) % p;
  if (disc == 0) throw ValidationError("singular curve: 4a^3 + 27b^2 = 0 mod p");
  return CurveParams(p, a, b);
}

bool on_curve(const CurveParams& curve, const CurvePoint& point) {
  if (point.is_infinity()) return true;
  const Field p = curve.p();
  if (point.x < 0 || point.x >= p || point.y < 0 || point.y >= p) return false;
  return mod_mul(point.y, point.y, p) == curve.rhs(point.x);
}

void validate_weights(const CurveParams& curve, const WeightVector& weights) {
  if (weights.empty()) throw ValidationError("weight vector must hold at least one point");
  for (const auto& point : weights)
    if (!on_curve(curve, point)) throw ValidationError("weight " + format_point(point) + " is not on the curve");
}

CurvePoint negate(const CurvePoint& point, const CurveParams& curve) {
  if (point.is_infinity()) return point;
  return CurvePoint::affine(point.x, point.y == 0 ? 0 : curve.p() - point.y);
}

CurvePoint add(const CurvePoint& lhs, const CurvePoint& rhs, const CurveParams& curve) {
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;
  const Field p = curve.p();
  Field slope;
  if (lhs.x == rhs.x) {
    if ((lhs.y + rhs.y) % p == 0) return CurvePoint::at_infinity();
    // tangent
    const Field num = (3 * mod_mul(lhs.x, lhs.x, p) + curve.a()) % p;
    slope = mod_mul(num, mod_inverse(2 * lhs.y % p, p), p);
  } else {
    const Field num = (rhs.y - lhs.y + p) % p;
    slope = mod_mul(num, mod_inverse((rhs.x - lhs.x + p) % p, p), p);
  }
  const Field x = ((mod_mul(slope, slope, p) - lhs.x - rhs.x) % p + 2 * p) % p;
  const Field y = ((mod_mul(slope, (lhs.x - x + p) % p, p) - lhs.y) % p + p) % p;
  return CurvePoint::affine(x, y);
}

CurvePoint scalar_mul(std::uint64_t k, const CurvePoint& point, const CurveParams& curve) {
  CurvePoint result = CurvePoint::at_infinity();
  CurvePoint addend = point;
  while (k > 0) {
    if (k & 1U) result = add(result, addend, curve);
    addend = add(addend, addend, curve);
    k >>= 1;
  }
  return result;
}

bool within_hasse_interval(std::uint64_t order, Field p) {
  const auto deviation = static_cast<std::int64_t>(order) - p - 1;
  return deviation * deviation <= 4 * p;
}

std::vector<CurvePoint> enumerate_points(const CurveParams& curve) {
  const Field p = curve.p();
  if (p >= kMaxEnumerationPrime) throw ScaleGuardError("point enumeration is limited to p < 2^20");
  const auto root = square_roots(p);
  std::vector<CurvePoint> points{CurvePoint::at_infinity()};
  points.reserve(p + 2 * static_cast<std::size_t>(std::sqrt(static_cast<double>(p))) + 2);
  for (Field x = 0; x < p; ++x) {
    const Field v = curve.rhs(x);
    const Field y = root[v];
    if (y < 0) continue;
    if (y == 0) {
      points.push_back(CurvePoint::affine(x, 0));
    } else {
      points.push_back(CurvePoint::affine(x, y));
      points.push_back(CurvePoint::affine(x, p - y));
    }
  }
  if (!within_hasse_interval(points.size(), p))
    throw std::logic_error("point count violates the Hasse bound for " + format_curve(curve));
  return points;
}

std::uint64_t point_count(const CurveParams& curve) {
  const Field p = curve.p();
  if (p >= kMaxEnumerationPrime) throw ScaleGuardError("point counting is limited to p < 2^20");
  const auto root = square_roots(p);
  std::uint64_t count = 1;
  for (Field x = 0; x < p; ++x) {
    const Field y = root[curve.rhs(x)];
    if (y == 0)
      count += 1;
    else if (y > 0)
      count += 2;
  }
  return count;
}

CurveParams parse_curve(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ValidationError("curve must be given as p,a,b");
  return validate_curve(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
}

std::string format_curve(const CurveParams& curve) {
  return std::to_string(curve.p()) + "," + std::to_string(curve.a()) + "," + std::to_string(curve.b());
}

CurvePoint parse_point(std::string_view text) {
  text = trim(text);
  if (text == "inf") return CurvePoint::at_infinity();
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ValidationError("point must be 'inf' or x,y");
  return CurvePoint::affine(parse_int(parts[0]), parse_int(parts[1]));
}

std::string format_point(const CurvePoint& point) {
  if (point.is_infinity()) return "inf";
  return std::to_string(point.x) + "," + std::to_string(point.y);
}

}  // namespace ecss::ec
