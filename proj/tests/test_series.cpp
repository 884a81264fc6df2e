#include <gtest/gtest.h>

#include "pascal2/fermat.hpp"
#include "pascal2/series.hpp"

using namespace pascal2;

namespace {

Rat q(long num, long den) { return Rat(BigInt(num), BigInt(den)); }

}  // namespace

TEST(Series, FactorCount) {
  EXPECT_EQ(factor_count(14), 4U);
  EXPECT_EQ(factor_count(15), 4U);
  EXPECT_EQ(factor_count(16), 5U);
  EXPECT_EQ(factor_count(255), 8U);
}

TEST(Series, GenfuncNumeric) {
  const auto g = genfunc_numeric(255);
  ASSERT_EQ(g.degree_bound(), 255U);
  for (std::uint64_t n = 0; n <= 255; ++n) ASSERT_EQ(g[n], c(n)) << n;
  EXPECT_EQ(genfunc_numeric(14)[14], BigNat(21845));
}

TEST(Series, GenfuncPoly) {
  const auto g = genfunc_poly(63);
  EXPECT_EQ(g[1], IntPoly::z() + IntPoly(1));
  for (std::uint64_t n = 0; n <= 63; ++n) ASSERT_EQ(g[n], p_factored(n)) << n;
}

TEST(Series, SumInvC) {
  EXPECT_EQ(sum_inv_c(1).partial, q(4, 3));
  EXPECT_EQ(sum_inv_c(1).tail_bound, q(1, 2));
  const auto s60 = sum_inv_c(60);
  const Rat prod = prod_one_plus_invF(6, Sign::Plus, Rat(2), 1);
  EXPECT_LT(s60.partial, prod);
  EXPECT_LT(prod, s60.partial + s60.tail_bound);
  EXPECT_EQ(decimal_render(s60.partial, 9), "1.700735495");
}

TEST(Series, ProductOfInverseFermat) {
  EXPECT_EQ(prod_one_plus_invF(2, Sign::Plus, Rat(2), 1), q(8, 5));
  const Rat zz = q(7, 3);
  EXPECT_EQ(prod_one_plus_invF(1, Sign::Plus, zz, 2), Rat(1) + Rat(1) / pow(zz + Rat(1), 2));
  EXPECT_EQ(decimal_render(prod_one_plus_invF(6, Sign::Plus, Rat(2), 1), 9), "1.700735495");
  EXPECT_THROW(prod_one_plus_invF(2, Sign::Plus, Rat(1), 1), PreconditionError);
  EXPECT_THROW(prod_one_plus_invF(2, Sign::Plus, q(-1, 2), 1), PreconditionError);
  EXPECT_THROW(prod_one_plus_invF(2, Sign::Plus, Rat(2), 0), PreconditionError);
}

TEST(Series, MinusProductClosedForm) {
  // prod_{k<K} (1 - 1/(z^(2^k)+1)) = z^(2^K - 1) (z - 1) / (z^(2^K) - 1).
  for (long zn : {2L, 3L}) {
    const Rat zr(zn);
    for (unsigned k = 1; k <= 8; ++k) {
      const std::int64_t top = std::int64_t{1} << k;
      const Rat closed = pow(zr, top - 1) * (zr - Rat(1)) / (pow(zr, top) - Rat(1));
      EXPECT_EQ(prod_one_plus_invF(k, Sign::Minus, zr, 1), closed) << zn << " " << k;
    }
  }
  const Rat at8 = prod_one_plus_invF(8, Sign::Minus, Rat(2), 1);
  EXPECT_LT(abs(at8 - q(1, 2)), pow2(-250));
}

TEST(Series, SignedSum) {
  EXPECT_EQ(signed_sum_inv_p(Rat(2), 0), Rat(1));
  EXPECT_EQ(signed_sum_inv_p(Rat(2), 1), q(2, 3));
  EXPECT_LT(abs(signed_sum_inv_p(Rat(2), 100) - q(1, 2)), q(1, 1000000000000));
  EXPECT_LT(abs(signed_sum_inv_p(Rat(3), 100) - q(2, 3)), q(1, 1000000000000));
  EXPECT_THROW(signed_sum_inv_p(q(1, 2), 3), PreconditionError);
}

TEST(Series, BinaryProduct) {
  EXPECT_TRUE(binary_product_check(q(1, 2), 3));
  EXPECT_EQ(q(3, 2) * q(5, 4) * q(17, 16), q(255, 128));
  for (const Rat& x : {q(1, 2), q(1, 3), q(2, 5), q(-3, 4)})
    for (unsigned k = 1; k <= 8; ++k) EXPECT_TRUE(binary_product_check(x, k));
  EXPECT_THROW(binary_product_check(Rat(1), 2), PreconditionError);
}

TEST(Series, EulerAndMoebius) {
  EXPECT_EQ(euler_sum_q(Rat(2), 1, 1), Rat(1));
  EXPECT_EQ(euler_sum_q(Rat(2), 1, 4), q(74, 45));
  EXPECT_EQ(q(1, 1) + q(1, 3) + q(1, 5) + q(1, 9), q(74, 45));
  EXPECT_EQ(moebius_sum_q(Rat(2), 1, 1), Rat(1));
  EXPECT_EQ(moebius_sum_q(Rat(2), 1, 4), q(7, 15));
  const auto partials = euler_partial_sums(Rat(2), 1, 500);
  ASSERT_EQ(partials.size(), 500U);
  for (std::size_t i = 1; i < partials.size(); ++i) ASSERT_LT(partials[i - 1], partials[i]);
  EXPECT_LT(partials.back(), Rat(2));
  EXPECT_EQ(partials[3], q(74, 45));
  EXPECT_THROW(euler_sum_q(Rat(1), 1, 3), PreconditionError);
  EXPECT_THROW(moebius_sum_q(Rat(2), 0, 3), PreconditionError);
}

TEST(Series, PolyStephan) {
  auto r = poly_stephan_ratio(Rat(2), 2, 4);
  EXPECT_EQ(r.target, Rat(5));
  EXPECT_TRUE(r.exact_relation);
  // t=3 target is (z^4+1)/(z^2+1).
  const Rat z3(3);
  r = poly_stephan_ratio(z3, 3, 4);
  EXPECT_EQ(r.target, (pow(z3, 4) + Rat(1)) / (z3 * z3 + Rat(1)));
  r = poly_stephan_ratio(z3, 2, 16);
  EXPECT_LT(abs(r.ratio - Rat(10)), q(1, 1000000000));
  for (const Rat& zz : {Rat(2), Rat(3), q(5, 2)})
    for (unsigned t = 2; t <= 5; ++t)
      for (std::uint64_t n = (t == 2 ? 1 : 0); n <= 16; ++n)
        ASSERT_TRUE(poly_stephan_ratio(zz, t, n).exact_relation) << t << " " << n;
  EXPECT_THROW(poly_stephan_ratio(Rat(2), 2, 0), PreconditionError);
  EXPECT_THROW(poly_stephan_ratio(Rat(1), 3, 2), PreconditionError);
  EXPECT_THROW(poly_stephan_ratio(Rat(2), 1, 2), PreconditionError);
}

TEST(Series, DecimalRender) {
  EXPECT_EQ(decimal_render(q(4, 3), 5), "1.33333");
  EXPECT_EQ(decimal_render(q(1, 2), 3), "0.500");
  EXPECT_EQ(decimal_render(q(2, 3), 4), "0.6666");
  EXPECT_EQ(decimal_render(q(-2, 3), 2), "-0.66");
  EXPECT_EQ(decimal_render(q(1, 1000), 2), "0.00");
  EXPECT_EQ(decimal_render(Rat(7), 1), "7.0");
  EXPECT_THROW(decimal_render(Rat(1), 0), PreconditionError);
}
