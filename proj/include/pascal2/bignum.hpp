#ifndef PASCAL2_BIGNUM_HPP
#define PASCAL2_BIGNUM_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pascal2 {

/// Signed arbitrary-precision integer. Used for polynomial coefficients.
using BigInt = mpz_class;

/// Arbitrary-precision natural number.
///
/// Thin value wrapper over a GMP integer that keeps the value nonnegative.
/// Subtraction that would go below zero throws std::domain_error.
class BigNat {
 public:
  BigNat() = default;
  BigNat(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigNat(const BigInt& v);
  explicit BigNat(const std::string& decimal);

  static BigNat power_of_two(std::uint64_t exponent);
  /// Little-endian 64-bit limbs, word 0 least significant.
  static BigNat from_words(std::span<const std::uint64_t> words);

  const BigInt& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool bit(std::uint64_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }
  /// Number of binary digits; 0 for zero.
  std::uint64_t bit_length() const;
  std::uint64_t popcount() const { return mpz_popcount(v_.get_mpz_t()); }
  unsigned long mod_ui(unsigned long m) const { return mpz_fdiv_ui(v_.get_mpz_t(), m); }

  BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
  BigNat& operator-=(const BigNat& o);
  BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }
  BigNat& operator<<=(std::uint64_t s);
  BigNat& operator>>=(std::uint64_t s);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator<<(BigNat a, std::uint64_t s) { return a <<= s; }
  friend BigNat operator>>(BigNat a, std::uint64_t s) { return a >>= s; }

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  std::string to_string() const { return v_.get_str(10); }

 private:
  BigInt v_;
};

struct DivMod {
  BigNat quotient;
  BigNat remainder;
};

/// Throws std::domain_error on division by zero.
DivMod divmod(const BigNat& a, const BigNat& b);
BigNat gcd(const BigNat& a, const BigNat& b);
BigNat pow(const BigNat& base, unsigned long exponent);

/// Exact rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& v) : q_(v) {}
  explicit Rat(const BigNat& v) : q_(v.value()) {}
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const mpq_class& q);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const { return q_.get_str(10); }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);
/// Integer power; negative exponents invert (zero base then throws).
Rat pow(const Rat& base, std::int64_t exponent);
/// 2^exponent as a rational, exponent may be negative.
Rat pow2(std::int64_t exponent);

}  // namespace pascal2

#endif  // PASCAL2_BIGNUM_HPP
