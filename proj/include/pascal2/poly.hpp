#ifndef PASCAL2_POLY_HPP
#define PASCAL2_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pascal2/bignum.hpp"
#include "pascal2/fermat.hpp"

namespace pascal2 {

/// Sparse polynomial in z with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class IntPoly {
 public:
  using Terms = std::map<std::uint64_t, BigInt>;

  /// Degree reported for the zero polynomial.
  static constexpr std::int64_t kZeroDegree = -1;

  IntPoly() = default;
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(Terms terms);

  static IntPoly monomial(BigInt coeff, std::uint64_t exponent);
  /// The polynomial z.
  static IntPoly z() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t degree() const;
  BigInt coeff(std::uint64_t exponent) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

  /// Ascending exponents joined by " + ", e.g. "-1 + 2*z + z^3"; "0" for zero.
  std::string to_string() const;

 private:
  void add_term(std::uint64_t exponent, const BigInt& coeff);

  Terms terms_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& base, unsigned exponent);

/// a(z^2): every exponent doubled.
IntPoly poly_compose_square(const IntPoly& a);

Rat poly_eval(const IntPoly& a, const Rat& x);

/// Quotient of exact division over Z; nullopt if the remainder is nonzero or
/// a quotient coefficient would not be an integer. Throws on a zero divisor.
std::optional<IntPoly> poly_exact_divide(const IntPoly& a, const IntPoly& b);

/// Coefficient of z^i is C(n, i) mod 2, from the Lucas parity rule.
IntPoly p_binomial(std::uint64_t n);

/// Product of (z^(2^k) + 1) over the set bits k of n.
IntPoly p_factored(std::uint64_t n);

/// z^(2^n) + 1.
IntPoly F_poly(unsigned n);

/// (p_2n(z) - 1) / z^2; n >= 1.
IntPoly l_poly(std::uint64_t n);

/// Exact polynomial identities. External ids in parentheses.
enum class PolyIdentity {
  /// (E6.7) p_2n(z) = p_n(z^2); n >= 0.
  EvenDoubling,
  /// (E6.8) p_2n+1(z) = (z+1) p_n(z^2); n >= 0.
  OddDoubling,
  /// (E6.9) F_n(z) = 2 + (z-1) prod_{i<n} F_i(z); n >= 1.
  FermatRecursion,
  /// (E7.1) p_(2^n - 1)(z) = (F_n(z) - 2) / (z - 1); n >= 1.
  RepunitQuotient,
  /// (E7.2) p_(2^m l + 2^(m-1)) = p_(2^m l) F_(m-1); m >= 1.
  HalfStepFactor,
  /// (E7.3) p_(2^t n + 2^(t-1) - 1) = (z+1) p_(2^t n + 2^(t-1) - 2); t >= 2.
  LowestFactor,
  /// (E7.4) (F_(t-1) - 2) p_(2^t n) = (z-1) p_(2^t n + 2^(t-1) - 1); t >= 1.
  RepunitShift,
  /// (E7.5) (F_(t-1) - 2) p_(2^t n + 2^(t-1)) = (z-1) F_(t-1) p_(2^t n + 2^(t-1) - 1); t >= 1.
  FermatRatio,
  /// (E7.6) (F_(t-1) - 2) p_(2^t n + 2^(t-1)) = (z^2-1) F_(t-1) p_(2^t n + 2^(t-1) - 2); t >= 2.
  StephanKey,
  /// (E7.9) (F_(t-1) - 2)(z^2 l_a + 1) = (z^2-1) F_(t-1) (z^2 l_(a-1) + 1),
  /// a = 2^(t-1) n + 2^(t-2); t >= 2, a >= 2.
  StephanCross,
};

std::string identity_id(PolyIdentity id);
std::optional<PolyIdentity> parse_poly_identity(const std::string& id);

struct PolyIdentitySides {
  IntPoly lhs;
  IntPoly rhs;
  /// False when an exact division inside the identity left a remainder.
  bool exact = true;

  bool holds() const { return exact && lhs == rhs; }
};

/// Throws PreconditionError when args fall outside the identity's domain.
PolyIdentitySides poly_identity_sides(PolyIdentity id, const IdentityArgs& args);
bool verify_poly_identity(PolyIdentity id, const IdentityArgs& args);

}  // namespace pascal2

#endif  // PASCAL2_POLY_HPP
