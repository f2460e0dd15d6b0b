#include <gtest/gtest.h>

#include <numeric>

#include "ecss/errors.hpp"
#include "ecss/gf2.hpp"

using namespace ecss;
using namespace ecss::gf2;

namespace {

// Polynomial remainder over F_2 by schoolbook long division.
std::uint64_t remainder_by(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - __builtin_clzll(b);
  while (a != 0) {
    const int da = 63 - __builtin_clzll(a);
    if (da < db) break;
    a ^= b << (da - db);
  }
  return a;
}

// Trial division by every polynomial of degree 1..r/2.
bool irreducible_by_trial_division(std::uint64_t f) {
  const int r = 63 - __builtin_clzll(f);
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (r / 2 + 1)); ++d)
    if (remainder_by(f, d) == 0) return false;
  return true;
}

}  // namespace

TEST(BinaryPoly, DegreeAndHex) {
  const auto poly = BinaryPoly::from_hex("0x409");
  EXPECT_EQ(poly.degree(), 10);
  EXPECT_EQ(poly.to_hex(), "0x409");
  EXPECT_EQ(BinaryPoly::from_hex("7"), BinaryPoly(0b111));
  EXPECT_THROW(BinaryPoly(1), ValidationError);
  EXPECT_THROW(BinaryPoly(0), ValidationError);
  EXPECT_THROW(BinaryPoly::from_hex("0xzz"), ValidationError);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(poly_is_irreducible(BinaryPoly(0b11)));    // X + 1
  EXPECT_TRUE(poly_is_irreducible(BinaryPoly(0b111)));   // X^2 + X + 1
  EXPECT_FALSE(poly_is_irreducible(BinaryPoly(0b101)));  // (X + 1)^2
  EXPECT_TRUE(poly_is_irreducible(BinaryPoly(0b10)));    // X
  EXPECT_FALSE(poly_is_irreducible(BinaryPoly(0b110)));  // X (X + 1)
}

TEST(Irreducible, MatchesTrialDivisionUpToDegree12) {
  int irreducible = 0;
  for (std::uint64_t f = 2; f < (1U << 13); ++f) {
    ASSERT_EQ(poly_is_irreducible(BinaryPoly(f)), irreducible_by_trial_division(f)) << std::hex << f;
    irreducible += irreducible_by_trial_division(f);
  }
  // number of irreducible polynomials over F_2 of degrees 1..12
  EXPECT_EQ(irreducible, 2 + 1 + 2 + 3 + 6 + 9 + 18 + 30 + 56 + 99 + 186 + 335);
}

TEST(GenerateBits, Examples) {
  EXPECT_EQ(generate_bits(LfsrSource(BinaryPoly(0b111), Bits{1, 0}), 6), (Bits{1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(generate_bits(LfsrSource(BinaryPoly(0b1011), Bits{0, 0, 0}), 5), Bits(5, 0));
  EXPECT_EQ(generate_bits(LfsrSource(BinaryPoly(0b11), Bits{1}), 3), (Bits{1, 1, 1}));
}

TEST(GenerateBits, SatisfiesRecurrence) {
  const BinaryPoly poly(0x409);
  const auto bits = generate_bits(LfsrSource(poly, 0x2b5), 3000);
  for (std::size_t n = 0; n + 10 < bits.size(); ++n) {
    int sum = 0;
    for (int i = 0; i < 10; ++i) sum ^= poly.coefficient(i) & bits[n + i];
    ASSERT_EQ(bits[n + 10], sum) << n;
  }
}

TEST(GenerateBits, RepeatableAndSkipConsistent) {
  LfsrSource source(BinaryPoly(0x409), 1);
  const auto first = generate_bits(source, 500);
  source.next();
  source.next();
  EXPECT_EQ(generate_bits(source, 500), first);  // reads always start at u(1)

  auto reader = source.clone();
  reader->reset();
  reader->skip(123);
  for (int i = 123; i < 500; ++i) ASSERT_EQ(reader->next(), first[i]);
}

TEST(SequencePeriod, Examples) {
  EXPECT_EQ(sequence_period(BinaryPoly(0b111), Bits{1, 0}), 3U);
  EXPECT_EQ(sequence_period(BinaryPoly(0b11), Bits{1}), 1U);
  EXPECT_EQ(sequence_period(BinaryPoly(0b1011), Bits{1, 0, 0}), 7U);
  EXPECT_EQ(sequence_period(BinaryPoly(0x409), 1), 1023U);
}

TEST(SequencePeriod, Errors) {
  EXPECT_THROW(sequence_period(BinaryPoly(0b111), Bits{0, 0}), ValidationError);
  EXPECT_THROW(sequence_period(BinaryPoly(0b110), Bits{1, 0}), ValidationError);
  EXPECT_THROW(sequence_period(BinaryPoly(0b111), Bits{1}), ValidationError);
  EXPECT_THROW(sequence_period(BinaryPoly((1ULL << 25) | 0b1001), 1), ScaleGuardError);
}

// For irreducible f every nonzero start has the same period, and it divides
// 2^r - 1; the bit sequence has exactly that least period.
TEST(SequencePeriod, IrreducibleInvariantsUpToDegree8) {
  for (std::uint64_t f = 3; f < (1U << 9); f += 2) {
    const BinaryPoly poly(f);
    if (!poly_is_irreducible(poly)) continue;
    const int r = poly.degree();
    const std::uint64_t full = (std::uint64_t{1} << r) - 1;
    const std::uint64_t tau = sequence_period(poly, 1);
    EXPECT_EQ(full % tau, 0U) << std::hex << f;
    for (std::uint64_t init = 1; init <= full; ++init) ASSERT_EQ(sequence_period(poly, init), tau);

    const auto bits = generate_bits(LfsrSource(poly, 1), 3 * tau + r);
    for (std::uint64_t n = 0; n + tau < bits.size(); ++n) ASSERT_EQ(bits[n], bits[n + tau]);
    for (std::uint64_t d = 1; d < tau; ++d) {
      bool periodic = true;
      for (std::uint64_t n = 0; n + d < bits.size() && periodic; ++n) periodic = bits[n] == bits[n + d];
      EXPECT_FALSE(periodic) << "smaller period " << d << " for " << std::hex << f;
    }
  }
}

TEST(WindowsDistinct, Examples) {
  EXPECT_TRUE(windows_distinct(LfsrSource(BinaryPoly(0b111), Bits{1, 0}), 2, 3));
  EXPECT_FALSE(windows_distinct(SequenceSource({}, {1}), 2, 2));
  EXPECT_FALSE(windows_distinct(LfsrSource(BinaryPoly(0b111), Bits{1, 0}), 2, 5));
}

TEST(WindowsDistinct, EveryMaximalPeriodLfsrUpToDegree12) {
  int maximal = 0;
  for (int r = 1; r <= 12; ++r) {
    for (std::uint64_t f = (1ULL << r) | 1; f < (2ULL << r); f += 2) {
      const BinaryPoly poly(f);
      if (!has_maximal_period(poly)) continue;
      ++maximal;
      ASSERT_TRUE(windows_distinct(LfsrSource(poly, 1), r, (1ULL << r) - 1)) << std::hex << f;
    }
  }
  // phi(2^r - 1) / r primitive polynomials of each degree
  EXPECT_EQ(maximal, 1 + 1 + 2 + 2 + 6 + 6 + 18 + 16 + 48 + 60 + 176 + 144);
}

TEST(SequenceSource, PurityAndPeriod) {
  const SequenceSource periodic({}, {1, 0, 0});
  EXPECT_TRUE(periodic.purely_periodic());
  EXPECT_EQ(periodic.declared_period(), 3U);
  EXPECT_NO_THROW(require_purely_periodic(periodic));
  EXPECT_EQ(generate_bits(periodic, 7), (Bits{1, 0, 0, 1, 0, 0, 1}));

  const SequenceSource tail({1, 1}, {0, 1});
  EXPECT_FALSE(tail.purely_periodic());
  EXPECT_THROW(require_purely_periodic(tail), ValidationError);
  EXPECT_EQ(generate_bits(tail, 6), (Bits{1, 1, 0, 1, 0, 1}));
  EXPECT_THROW(SequenceSource({}, {}), ValidationError);
}

TEST(PackBits, RoundTrip) {
  const Bits bits{1, 0, 1, 1, 0, 0, 1};
  EXPECT_EQ(unpack_bits(pack_bits(bits), 7), bits);
  EXPECT_THROW(pack_bits(Bits{2}), ValidationError);
}
