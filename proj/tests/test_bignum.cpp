#include <gtest/gtest.h>

#include "pascal2/bignum.hpp"

using namespace pascal2;

TEST(BigNat, ArithmeticAndBits) {
  const BigNat a(255);
  EXPECT_EQ(a.bit_length(), 8U);
  EXPECT_EQ(a.popcount(), 8U);
  EXPECT_EQ(BigNat(0).bit_length(), 0U);
  EXPECT_EQ((BigNat(1) << 100) >> 99, BigNat(2));
  EXPECT_EQ(BigNat::power_of_two(64).to_string(), "18446744073709551616");
  EXPECT_EQ(BigNat("123456789012345678901234567890") * BigNat(10),
            BigNat("1234567890123456789012345678900"));
  const auto qr = divmod(BigNat(1285), BigNat(257));
  EXPECT_EQ(qr.quotient, BigNat(5));
  EXPECT_TRUE(qr.remainder.is_zero());
  EXPECT_EQ(gcd(BigNat(51), BigNat(85)), BigNat(17));
  EXPECT_TRUE(BigNat(3) < BigNat(5));
}

TEST(BigNat, FromWordsIsLittleEndian) {
  const std::uint64_t words[] = {1, 2};
  EXPECT_EQ(BigNat::from_words(words), (BigNat(2) << 64) + BigNat(1));
  EXPECT_EQ(BigNat::from_words({}), BigNat(0));
}

TEST(BigNat, RejectsNegativeResults) {
  EXPECT_THROW(BigNat(3) - BigNat(5), std::domain_error);
  EXPECT_THROW(BigNat(BigInt(-1)), std::domain_error);
  EXPECT_THROW(divmod(BigNat(3), BigNat(0)), std::domain_error);
  EXPECT_THROW(BigNat("12a"), std::invalid_argument);
}

TEST(Rat, CanonicalForm) {
  const Rat r(BigInt(152), BigInt(90));
  EXPECT_EQ(r.numerator(), 76);
  EXPECT_EQ(r.denominator(), 45);
  const Rat neg(BigInt(3), BigInt(-6));
  EXPECT_EQ(neg.numerator(), -1);
  EXPECT_EQ(neg.denominator(), 2);
  EXPECT_EQ(neg.to_string(), "-1/2");
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Rat, Powers) {
  EXPECT_EQ(pow(Rat(BigInt(2), BigInt(3)), 3), Rat(BigInt(8), BigInt(27)));
  EXPECT_EQ(pow(Rat(2), -2), Rat(BigInt(1), BigInt(4)));
  EXPECT_EQ(pow2(-3), Rat(BigInt(1), BigInt(8)));
  EXPECT_EQ(pow2(10), Rat(1024));
  EXPECT_EQ(pow(Rat(7), 0), Rat(1));
  EXPECT_THROW(pow(Rat(0), -1), std::domain_error);
  EXPECT_EQ(abs(Rat(-3)), Rat(3));
}
