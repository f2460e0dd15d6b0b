#ifndef ECSS_CURVE_HPP
#define ECSS_CURVE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecss::ec {

using Field = std::int64_t;

bool is_prime(std::uint64_t n);

/// Field arithmetic modulo p < 2^31; all operands are reduced residues.
inline Field mod_mul(Field a, Field b, Field p) { return a * b % p; }
Field mod_pow(Field base, std::uint64_t exp, Field p);
Field mod_inverse(Field a, Field p);

/// y^2 = x^3 + a x + b over F_p with p prime, 3 < p < 2^31 and nonzero
/// discriminant. Instances only come out of validate_curve.
class CurveParams {
 public:
  Field p() const { return p_; }
  Field a() const { return a_; }
  Field b() const { return b_; }

  /// Right-hand side x^3 + a x + b.
  Field rhs(Field x) const { return (mod_mul(mod_mul(x, x, p_), x, p_) + mod_mul(a_, x, p_) + b_) % p_; }

  friend bool operator==(const CurveParams&, const CurveParams&) = default;

 private:
  friend CurveParams validate_curve(std::int64_t p, std::int64_t a, std::int64_t b);
  CurveParams(Field p, Field a, Field b) : p_(p), a_(a), b_(b) {}

  Field p_, a_, b_;
};

CurveParams validate_curve(std::int64_t p, std::int64_t a, std::int64_t b);

/// The point at infinity O, or an affine point (x, y).
struct CurvePoint {
  Field x = 0;
  Field y = 0;
  bool infinity = true;

  static constexpr CurvePoint at_infinity() { return {}; }
  static constexpr CurvePoint affine(Field x, Field y) { return {x, y, false}; }

  bool is_infinity() const { return infinity; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// The points P_0, ..., P_{r-1} that weight the subset sums.
using WeightVector = std::vector<CurvePoint>;

bool on_curve(const CurveParams& curve, const CurvePoint& point);
/// Throws ValidationError when some point is off the curve or the vector is empty.
void validate_weights(const CurveParams& curve, const WeightVector& weights);

CurvePoint negate(const CurvePoint& point, const CurveParams& curve);
CurvePoint add(const CurvePoint& lhs, const CurvePoint& rhs, const CurveParams& curve);
CurvePoint scalar_mul(std::uint64_t k, const CurvePoint& point, const CurveParams& curve);

/// x(P) for affine P, and x(O) = 0.
inline Field x_coord(const CurvePoint& point) { return point.is_infinity() ? 0 : point.x; }

inline constexpr Field kMaxEnumerationPrime = Field{1} << 20;

/// All points of E(F_p), O first, then affine points by increasing x and y.
/// Requires p < 2^20.
std::vector<CurvePoint> enumerate_points(const CurveParams& curve);
/// #E(F_p) without materializing the points.
std::uint64_t point_count(const CurveParams& curve);
/// |order - p - 1| <= 2 sqrt(p), checked in integers.
bool within_hasse_interval(std::uint64_t order, Field p);

/// "p,a,b" decimal triple.
CurveParams parse_curve(std::string_view text);
std::string format_curve(const CurveParams& curve);
/// "inf" or "x,y".
CurvePoint parse_point(std::string_view text);
std::string format_point(const CurvePoint& point);

}  // namespace ecss::ec

#endif  // ECSS_CURVE_HPP
