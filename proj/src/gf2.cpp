#include "ecss/gf2.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <unordered_set>

#include "ecss/errors.hpp"

namespace ecss::gf2 {

namespace {

// a * X mod f, for deg a < deg f.
std::uint64_t times_x(std::uint64_t a, const BinaryPoly& f) {
  a <<= 1;
  if ((a >> f.degree()) & 1U) a ^= f.mask();
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, const BinaryPoly& f) {
  std::uint64_t result = 0;
  for (int i = f.degree() - 1; i >= 0; --i) {
    result = times_x(result, f);
    if ((b >> i) & 1U) result ^= a;
  }
  return result;
}

int poly_degree(std::uint64_t a) { return 63 - std::countl_zero(a); }

std::uint64_t poly_rem(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_rem(a, b);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t step_window(std::uint64_t window, std::uint64_t taps, int r) {
  const std::uint64_t feedback = std::popcount(window & taps) & 1U;
  return (window >> 1) | (feedback << (r - 1));
}

}  // namespace

BinaryPoly::BinaryPoly(std::uint64_t mask) : mask_(mask), degree_(mask == 0 ? -1 : poly_degree(mask)) {
  if (degree_ < 1) throw ValidationError("binary polynomial must have degree >= 1");
}

std::uint64_t parse_hex_mask(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t mask = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), mask, 16);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw ValidationError("malformed hexadecimal mask: '" + std::string(text) + "'");
  return mask;
}

BinaryPoly BinaryPoly::from_hex(std::string_view text) { return BinaryPoly(parse_hex_mask(text)); }

std::string BinaryPoly::to_hex() const {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(mask_));
  return buf;
}

// Ben-Or: f of degree r is irreducible iff gcd(X^(2^i) - X, f) = 1 for
// every i <= r/2.
bool poly_is_irreducible(const BinaryPoly& poly) {
  const int r = poly.degree();
  const std::uint64_t x = 0b10;
  std::uint64_t power = x;
  for (int i = 1; i <= r / 2; ++i) {
    power = mul_mod(power, power, poly);
    if (poly_gcd(poly.mask(), power ^ x) != 1) return false;
  }
  return true;
}

std::uint64_t pack_bits(const Bits& bits) {
  if (bits.size() > 64) throw ValidationError("at most 64 bits can be packed");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] > 1) throw ValidationError("bit values must be 0 or 1");
    mask |= std::uint64_t{bits[k]} << k;
  }
  return mask;
}

Bits unpack_bits(std::uint64_t mask, int count) {
  Bits bits(count);
  for (int k = 0; k < count; ++k) bits[k] = (mask >> k) & 1U;
  return bits;
}

LfsrSource::LfsrSource(BinaryPoly poly, const Bits& init) : LfsrSource(poly, pack_bits(init)) {
  if (static_cast<int>(init.size()) != poly.degree())
    throw ValidationError("initial window length must equal the polynomial degree");
}

LfsrSource::LfsrSource(BinaryPoly poly, std::uint64_t init_window)
    : poly_(poly), init_(init_window), state_(init_window) {
  if ((init_window >> poly_.degree()) != 0)
    throw ValidationError("initial window has bits beyond the polynomial degree");
}

std::uint8_t LfsrSource::next() {
  const auto out = static_cast<std::uint8_t>(state_ & 1U);
  state_ = step_window(state_, poly_.lower_mask(), poly_.degree());
  return out;
}

void LfsrSource::skip(std::uint64_t count) {
  const std::uint64_t taps = poly_.lower_mask();
  const int r = poly_.degree();
  for (std::uint64_t i = 0; i < count; ++i) state_ = step_window(state_, taps, r);
}

std::unique_ptr<BitSource> LfsrSource::clone() const { return std::make_unique<LfsrSource>(*this); }

SequenceSource::SequenceSource(Bits prefix, Bits cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw ValidationError("sequence source needs a nonempty cycle");
  for (auto b : prefix_)
    if (b > 1) throw ValidationError("bit values must be 0 or 1");
  for (auto b : cycle_)
    if (b > 1) throw ValidationError("bit values must be 0 or 1");
}

std::uint8_t SequenceSource::next() {
  const std::uint64_t pos = pos_++;
  if (pos < prefix_.size()) return prefix_[pos];
  return cycle_[(pos - prefix_.size()) % cycle_.size()];
}

void SequenceSource::skip(std::uint64_t count) { pos_ += count; }

std::unique_ptr<BitSource> SequenceSource::clone() const { return std::make_unique<SequenceSource>(*this); }

Bits generate_bits(const BitSource& source, std::uint64_t count) {
  auto reader = source.clone();
  reader->reset();
  Bits bits(count);
  for (auto& b : bits) b = reader->next();
  return bits;
}

std::uint64_t sequence_period(const BinaryPoly& poly, std::uint64_t init_window) {
  if (!poly.constant_term())
    throw ValidationError("period requires a characteristic polynomial with constant term 1");
  if (init_window == 0) throw ValidationError("period requires a nonzero initial window");
  if (poly.degree() > kMaxPeriodSearchDegree)
    throw ScaleGuardError("period search is limited to degree <= 24");
  if ((init_window >> poly.degree()) != 0)
    throw ValidationError("initial window has bits beyond the polynomial degree");
  const std::uint64_t taps = poly.lower_mask();
  std::uint64_t state = step_window(init_window, taps, poly.degree());
  std::uint64_t period = 1;
  while (state != init_window) {
    state = step_window(state, taps, poly.degree());
    ++period;
  }
  return period;
}

std::uint64_t sequence_period(const BinaryPoly& poly, const Bits& init) {
  if (static_cast<int>(init.size()) != poly.degree())
    throw ValidationError("initial window length must equal the polynomial degree");
  return sequence_period(poly, pack_bits(init));
}

bool has_maximal_period(const BinaryPoly& poly) {
  if (!poly.constant_term()) return false;
  return sequence_period(poly, 1) == (std::uint64_t{1} << poly.degree()) - 1;
}

bool windows_distinct(const BitSource& source, int r, std::uint64_t tau) {
  if (r < 1 || r > 63) throw ValidationError("window length must be in 1..63");
  if (tau > (std::uint64_t{1} << r)) return false;
  if (tau > (std::uint64_t{1} << 26)) throw ScaleGuardError("distinct-window check limited to tau <= 2^26");

  auto reader = source.clone();
  reader->reset();
  reader->next();  // windows start at u(2)
  std::uint64_t window = 0;
  for (int k = 0; k < r; ++k) window |= std::uint64_t{reader->next()} << k;

  const bool dense = r <= 26;
  std::vector<bool> seen_dense(dense ? std::size_t{1} << r : 0);
  std::unordered_set<std::uint64_t> seen_sparse;
  for (std::uint64_t n = 1; n <= tau; ++n) {
    if (dense) {
      if (seen_dense[window]) return false;
      seen_dense[window] = true;
    } else if (!seen_sparse.insert(window).second) {
      return false;
    }
    window = (window >> 1) | (std::uint64_t{reader->next()} << (r - 1));
  }
  return true;
}

void require_purely_periodic(const BitSource& source) {
  if (!source.purely_periodic()) throw ValidationError("bit source is not purely periodic");
}

}  // namespace ecss::gf2
