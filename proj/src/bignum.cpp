#include "pascal2/bignum.hpp"

#include <stdexcept>

namespace pascal2 {

BigNat::BigNat(const BigInt& v) : v_(v) {
  if (sgn(v_) < 0) throw std::domain_error("BigNat: negative value " + v_.get_str());
}

BigNat::BigNat(const std::string& decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("BigNat: not a decimal natural number: '" + decimal + "'");
  v_.set_str(decimal, 10);
}

BigNat BigNat::power_of_two(std::uint64_t exponent) {
  BigNat r;
  mpz_setbit(r.v_.get_mpz_t(), exponent);
  return r;
}

BigNat BigNat::from_words(std::span<const std::uint64_t> words) {
  BigNat r;
  if (!words.empty())
    mpz_import(r.v_.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  return r;
}

std::uint64_t BigNat::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (v_ < o.v_) throw std::domain_error("BigNat: subtraction underflow");
  v_ -= o.v_;
  return *this;
}

BigNat& BigNat::operator<<=(std::uint64_t s) {
  mpz_mul_2exp(v_.get_mpz_t(), v_.get_mpz_t(), s);
  return *this;
}

BigNat& BigNat::operator>>=(std::uint64_t s) {
  mpz_fdiv_q_2exp(v_.get_mpz_t(), v_.get_mpz_t(), s);
  return *this;
}

DivMod divmod(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw std::domain_error("BigNat: division by zero");
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
  return {BigNat(q), BigNat(r)};
}

BigNat gcd(const BigNat& a, const BigNat& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
  return BigNat(g);
}

BigNat pow(const BigNat& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exponent);
  return BigNat(r);
}

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("Rat: zero to a negative power");
    return Rat(1) / pow(base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return Rat(num, den);
}

Rat pow2(std::int64_t exponent) {
  const auto p = BigNat::power_of_two(static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rat(BigInt(1), p.value()) : Rat(p);
}

}  // namespace pascal2
