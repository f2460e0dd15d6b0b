#ifndef ECSS_GF2_HPP
#define ECSS_GF2_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecss::gf2 {

using Bits = std::vector<std::uint8_t>;

/// Polynomial over F_2 stored as a coefficient mask: bit i holds the
/// coefficient of X^i. Degrees 1..63 are representable.
class BinaryPoly {
 public:
  explicit BinaryPoly(std::uint64_t mask);

  /// Accepts "0x7", "0X7" or "7".
  static BinaryPoly from_hex(std::string_view text);
  std::string to_hex() const;

  std::uint64_t mask() const { return mask_; }
  int degree() const { return degree_; }
  bool coefficient(int i) const { return (mask_ >> i) & 1U; }
  bool constant_term() const { return mask_ & 1U; }
  /// Coefficients c_0..c_{r-1}, i.e. the mask without the leading term.
  std::uint64_t lower_mask() const { return mask_ & ~(std::uint64_t{1} << degree_); }

  friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

 private:
  std::uint64_t mask_;
  int degree_;
};

bool poly_is_irreducible(const BinaryPoly& poly);

/// Supplier of a binary sequence u(1), u(2), ... . Reads are deterministic:
/// after reset() the same bits come out again.
class BitSource {
 public:
  virtual ~BitSource() = default;

  /// Returns the next bit and advances the read position.
  virtual std::uint8_t next() = 0;
  /// Rewinds to u(1).
  virtual void reset() = 0;
  virtual std::unique_ptr<BitSource> clone() const = 0;

  virtual bool purely_periodic() const = 0;
  virtual std::optional<std::uint64_t> declared_period() const { return std::nullopt; }
  /// Recurrence order when the source is an LFSR.
  virtual std::optional<int> order() const { return std::nullopt; }

  virtual void skip(std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) next();
  }
};

/// Fibonacci LFSR for u(n+r) = sum_{i<r} c_i u(n+i) over F_2, where c_i are
/// the lower coefficients of the characteristic polynomial.
class LfsrSource final : public BitSource {
 public:
  /// `init` holds u(1), ..., u(r).
  LfsrSource(BinaryPoly poly, const Bits& init);
  /// Initial window packed as a mask, bit k = u(k+1).
  LfsrSource(BinaryPoly poly, std::uint64_t init_window);

  std::uint8_t next() override;
  void reset() override { state_ = init_; }
  std::unique_ptr<BitSource> clone() const override;
  bool purely_periodic() const override { return poly_.constant_term(); }
  std::optional<int> order() const override { return poly_.degree(); }
  void skip(std::uint64_t count) override;

  const BinaryPoly& poly() const { return poly_; }
  std::uint64_t initial_window() const { return init_; }
  /// Current window (u(n), ..., u(n+r-1)) packed as a mask.
  std::uint64_t window() const { return state_; }

 private:
  BinaryPoly poly_;
  std::uint64_t init_;
  std::uint64_t state_;
};

/// A finite prefix followed by an endlessly repeated cycle. Purely periodic
/// exactly when the prefix is empty.
class SequenceSource final : public BitSource {
 public:
  SequenceSource(Bits prefix, Bits cycle);

  std::uint8_t next() override;
  void reset() override { pos_ = 0; }
  std::unique_ptr<BitSource> clone() const override;
  bool purely_periodic() const override { return prefix_.empty(); }
  std::optional<std::uint64_t> declared_period() const override { return cycle_.size(); }
  void skip(std::uint64_t count) override;

 private:
  Bits prefix_;
  Bits cycle_;
  std::uint64_t pos_ = 0;
};

/// u(1..count), read from a fresh copy of `source`.
Bits generate_bits(const BitSource& source, std::uint64_t count);

/// Least period of the state sequence started from `init_window` (bit k is
/// u(k+1)). Requires a nonzero window, a nonzero constant term, and degree
/// at most 24.
std::uint64_t sequence_period(const BinaryPoly& poly, std::uint64_t init_window);
std::uint64_t sequence_period(const BinaryPoly& poly, const Bits& init);

/// True when the period from the unit window is 2^r - 1.
bool has_maximal_period(const BinaryPoly& poly);

/// True iff (u(n+1), ..., u(n+r)) for n = 1..tau are pairwise distinct.
bool windows_distinct(const BitSource& source, int r, std::uint64_t tau);

/// Throws ValidationError for sources with a preperiod.
void require_purely_periodic(const BitSource& source);

/// Hex mask such as "0x7" or "7".
std::uint64_t parse_hex_mask(std::string_view text);

/// Packs bits (b_0 at bit 0) into a mask; at most 64 bits.
std::uint64_t pack_bits(const Bits& bits);
Bits unpack_bits(std::uint64_t mask, int count);

inline constexpr int kMaxPeriodSearchDegree = 24;

}  // namespace ecss::gf2

#endif  // ECSS_GF2_HPP
