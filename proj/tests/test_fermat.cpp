#include <gtest/gtest.h>

#include <array>
#include <random>

#include "pascal2/bitrow.hpp"
#include "pascal2/fermat.hpp"

using namespace pascal2;

namespace {

constexpr std::array<unsigned long, 15> kTable = {1,   3,   5,    15,   17,   51,    85,   255,
                                                  257, 771, 1285, 3855, 4369, 13107, 21845};

}  // namespace

TEST(Fermat, SmallValues) {
  EXPECT_EQ(fermat(0), BigNat(3));
  EXPECT_EQ(fermat(1), BigNat(5));
  EXPECT_EQ(fermat(2), BigNat(17));
  EXPECT_EQ(fermat(4), BigNat(65537));
  EXPECT_EQ(fermat(5).to_string(), "4294967297");
}

TEST(Fermat, ProductRecursion) {
  BigNat product(1);
  for (unsigned k = 0; k <= 6; ++k) {
    EXPECT_EQ(fermat(k), product + BigNat(2)) << "k=" << k;
    product *= fermat(k);
  }
}

TEST(Fermat, PairwiseCoprime) {
  for (unsigned i = 0; i <= 8; ++i)
    for (unsigned j = i + 1; j <= 8; ++j) EXPECT_EQ(gcd(fermat(i), fermat(j)), BigNat(1));
}

TEST(Fermat, CapIsEnforced) {
  EXPECT_THROW(fermat(26), CapExceeded);
  EXPECT_THROW(fermat(3, 2), CapExceeded);
  EXPECT_THROW(d(8, 2), CapExceeded);
  EXPECT_NO_THROW(fermat(2, 2));
}

TEST(Fermat, Support) {
  EXPECT_EQ(support(5).exponents, (std::vector<unsigned>{0, 2}));
  EXPECT_TRUE(support(0).exponents.empty());
  EXPECT_EQ(support(12).exponents, (std::vector<unsigned>{2, 3}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t n = rng();
    const auto sup = support(n);
    EXPECT_EQ(sup.reconstruct(), n);
    EXPECT_EQ(sup.exponents.size(), s(n));
    EXPECT_TRUE(std::is_sorted(sup.exponents.begin(), sup.exponents.end()));
  }
}

TEST(Fermat, DigitSum) {
  EXPECT_EQ(s(7), 3U);
  EXPECT_EQ(s(0), 0U);
  EXPECT_EQ(s(10), 2U);
}

TEST(Fermat, DAndCExamples) {
  EXPECT_EQ(d(5), BigNat(51));
  EXPECT_EQ(d(0), BigNat(1));
  EXPECT_EQ(d(7), BigNat(255));
  for (std::size_t n = 0; n < kTable.size(); ++n) EXPECT_EQ(c(n), BigNat(kTable[n])) << "n=" << n;
  for (unsigned k = 0; k <= 5; ++k) {
    EXPECT_EQ(c(std::uint64_t{1} << k), fermat(k));
    EXPECT_EQ(c((std::uint64_t{1} << k) - 1), fermat(k) - BigNat(2));
  }
}

TEST(Fermat, HewgillExamples) {
  EXPECT_EQ(hewgill(6), BigNat(85));
  EXPECT_EQ(hewgill(0), BigNat(1));
  EXPECT_EQ(hewgill(9), BigNat(771));
}

TEST(Fermat, RecursiveStreamCases) {
  const auto values = c_stream_recursive(14);
  ASSERT_EQ(values.size(), 15U);
  for (std::size_t n = 0; n < kTable.size(); ++n) EXPECT_EQ(values[n], BigNat(kTable[n]));
  // c(4) = F(2) is followed by 3 F(2); c(3) = F(2) - 2 is followed by F(2).
  EXPECT_EQ(values[5], BigNat(3) * fermat(2));
  EXPECT_EQ(values[4], fermat(2));
  EXPECT_EQ(c_stream_recursive(0), std::vector<BigNat>{BigNat(1)});
}

TEST(Fermat, FourWayAgreement) {
  RecursiveCStream stream;
  BitRow stepped = row(0);
  for (std::uint64_t n = 0; n <= 600; ++n) {
    if (n > 0) stepped = step(stepped);
    const BigNat dn = d(n);
    ASSERT_EQ(dn, hewgill(n)) << n;
    ASSERT_EQ(dn, kernel_value(row(n))) << n;
    ASSERT_EQ(dn, kernel_value(stepped)) << n;
    ASSERT_EQ(dn, stream.next()) << n;
    ASSERT_EQ(dn.bit_length(), n + 1) << n;
  }
}

TEST(Fermat, LExamples) {
  EXPECT_EQ(l(1), BigNat(1));
  EXPECT_EQ(l(0), BigNat(0));
  for (unsigned k = 0; k <= 5; ++k)
    EXPECT_EQ(l(std::uint64_t{1} << k), BigNat::power_of_two((std::uint64_t{2} << k) - 2)) << "k=" << k;
}

TEST(Fermat, CircAndOrthogonality) {
  EXPECT_EQ(circ(4, 3), 0U);
  EXPECT_EQ(circ(5, 5), 2U);
  EXPECT_EQ(circ(6, 3), 1U);
  EXPECT_TRUE(orthogonal(4, 3));
  EXPECT_FALSE(orthogonal(5, 5));
  for (std::uint64_t t = 1; t <= 6; ++t)
    for (std::uint64_t n = 0; n <= 20; ++n)
      EXPECT_TRUE(orthogonal(1, (n << t) + (std::uint64_t{1} << t) - 2));
}

TEST(Fermat, AdditionTheorem) {
  EXPECT_TRUE(verify_addition_theorem(4, 3));
  EXPECT_TRUE(verify_addition_theorem(8, 2));
  EXPECT_EQ(c(10), BigNat(1285));
  for (std::uint64_t n : {0ULL, 1ULL, 77ULL}) EXPECT_TRUE(verify_addition_theorem(0, n));
  EXPECT_THROW(verify_addition_theorem(5, 5), PreconditionError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t u = rng() & 0xFFF;
    const std::uint64_t v = rng() & 0xFFF & ~u;
    ASSERT_TRUE(verify_addition_theorem(u, v)) << u << " " << v;
  }
}

TEST(Fermat, IdentityWorkedValues) {
  // t=2, n=2: (F(1)-2) c(8) = 3 * 257 = 771 = c(9).
  auto sides = identity_sides(FermatIdentity::RepunitShift, {.t = 2, .n = 2});
  EXPECT_EQ(sides.lhs, BigNat(771));
  EXPECT_EQ(sides.rhs, BigNat(771));
  // t=2, n=2: 3 c(10) = 3855 = 3 F(1) c(8) = 15 * 257.
  sides = identity_sides(FermatIdentity::StephanKey, {.t = 2, .n = 2});
  EXPECT_EQ(sides.lhs, BigNat(3855));
  EXPECT_EQ(sides.rhs, BigNat(15 * 257));
  // t=2, n=1: 3 c(6) = 255 = 15 c(4).
  sides = identity_sides(FermatIdentity::StephanKey, {.t = 2, .n = 1});
  EXPECT_EQ(sides.lhs, BigNat(255));
  EXPECT_TRUE(sides.holds());
  // m=2, l=1: c(6) = c(4) F(1) = 85.
  sides = identity_sides(FermatIdentity::HalfStepFactor, {.l = 1, .m = 2});
  EXPECT_EQ(sides.lhs, BigNat(85));
  EXPECT_EQ(sides.rhs, BigNat(85));
}

TEST(Fermat, IdentitiesHoldOverRange) {
  for (std::uint64_t t = 1; t <= 6; ++t)
    for (std::uint64_t n = 0; n <= 32; ++n) {
      EXPECT_TRUE(verify_identity(FermatIdentity::RepunitShift, {.t = t, .n = n})) << t << "," << n;
      EXPECT_TRUE(verify_identity(FermatIdentity::FermatRatio, {.t = t, .n = n})) << t << "," << n;
      if (t >= 2) EXPECT_TRUE(verify_identity(FermatIdentity::StephanKey, {.t = t, .n = n})) << t << "," << n;
    }
  for (std::uint64_t m = 1; m <= 5; ++m)
    for (std::uint64_t l = 0; l <= 32; ++l)
      EXPECT_TRUE(verify_identity(FermatIdentity::HalfStepFactor, {.l = l, .m = m}));
}

TEST(Fermat, IdentityPreconditionsAreDistinctFromFailure) {
  EXPECT_THROW(verify_identity(FermatIdentity::RepunitShift, {.t = 0, .n = 1}), PreconditionError);
  EXPECT_THROW(verify_identity(FermatIdentity::StephanKey, {.t = 1, .n = 1}), PreconditionError);
  EXPECT_THROW(verify_identity(FermatIdentity::HalfStepFactor, {.l = 1, .m = 0}), PreconditionError);
  EXPECT_THROW(verify_identity(FermatIdentity::RepunitShift, {.t = 70, .n = 1}), PreconditionError);
}

TEST(Fermat, SharedTopFactor) {
  // c(5) = 51 = F(2) c(1): k-1 = 1, l-1 = 5.
  const auto sides = identity_sides(FermatIdentity::SharedTopFactor, {.k = 2, .l = 6, .m = 2});
  EXPECT_EQ(sides.lhs, BigNat(3 * 85));
  EXPECT_TRUE(sides.holds());
  for (std::uint64_t m = 2; m <= 6; ++m)
    for (std::uint64_t below = 1; below + 2 <= (std::uint64_t{1} << m); ++below)
      EXPECT_TRUE(verify_identity(FermatIdentity::SharedTopFactor,
                                  {.k = below + 1, .l = below + 1 + (std::uint64_t{1} << m), .m = m}));
  // Same top factor F(2) but not a cofactor pair: the identity would be false, so it is rejected.
  EXPECT_NE(c(5) * c(7), c(6) * c(6));
  EXPECT_THROW(verify_identity(FermatIdentity::SharedTopFactor, {.k = 6, .l = 7, .m = 2}), PreconditionError);
  // Cofactor equal to F(m) - 2 falls outside the open interval.
  EXPECT_THROW(verify_identity(FermatIdentity::SharedTopFactor, {.k = 4, .l = 8, .m = 2}), PreconditionError);
  // Wrong m.
  EXPECT_THROW(verify_identity(FermatIdentity::SharedTopFactor, {.k = 2, .l = 6, .m = 1}), PreconditionError);
}

TEST(Fermat, LargestFermatDivisor) {
  EXPECT_EQ(largest_fermat_divisor(BigNat(51)), 2U);
  EXPECT_EQ(largest_fermat_divisor(c(1000)), 9U);
  EXPECT_EQ(largest_fermat_divisor(BigNat(1)), std::nullopt);
  EXPECT_EQ(largest_fermat_divisor(BigNat(7)), std::nullopt);
}

TEST(Fermat, IdentityIds) {
  for (auto id : {FermatIdentity::RepunitShift, FermatIdentity::FermatRatio, FermatIdentity::StephanKey,
                  FermatIdentity::SharedTopFactor, FermatIdentity::HalfStepFactor})
    EXPECT_EQ(parse_fermat_identity(identity_id(id)), id);
  EXPECT_EQ(parse_fermat_identity("L9.9"), std::nullopt);
}

TEST(Stephan, Limits) {
  EXPECT_EQ(stephan_limit(2), Rat(5));
  EXPECT_EQ(stephan_limit(3), Rat(BigInt(17), BigInt(5)));
  EXPECT_EQ(stephan_limit(4), Rat(BigInt(257), BigInt(85)));
  EXPECT_EQ(stephan_limit(5), Rat(BigInt(65537), BigInt(21845)));
  EXPECT_THROW(stephan_limit(1), PreconditionError);
}

TEST(Stephan, RatioApproachesLimit) {
  const Rat eps(BigInt(1), BigInt(1000000000));
  EXPECT_LT(abs(stephan_ratio(2, 16) - Rat(5)), eps);
  EXPECT_THROW(stephan_ratio(2, 0), PreconditionError);
  EXPECT_THROW(stephan_ratio(1, 4), PreconditionError);
  // Deviation shrinks as n doubles.
  for (unsigned t = 2; t <= 5; ++t) {
    Rat previous = abs(stephan_ratio(t, 1) - stephan_limit(t));
    for (unsigned j = 1; j <= 8; ++j) {
      const Rat dev = abs(stephan_ratio(t, std::uint64_t{1} << j) - stephan_limit(t));
      EXPECT_LT(dev, previous) << "t=" << t << " j=" << j;
      previous = dev;
    }
  }
}
