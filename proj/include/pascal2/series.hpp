#ifndef PASCAL2_SERIES_HPP
#define PASCAL2_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pascal2/bignum.hpp"
#include "pascal2/poly.hpp"

namespace pascal2 {

/// Coefficients c_0 .. c_N of a power series in x truncated at degree N.
template <class Coeff>
struct TruncatedSeries {
  std::vector<Coeff> coeffs;

  std::size_t degree_bound() const { return coeffs.size() - 1; }
  const Coeff& operator[](std::size_t i) const { return coeffs[i]; }
};

/// Smallest K with 2^K > N: the number of factors (1 + a_k x^(2^k)) that can
/// touch degrees 0..N.
unsigned factor_count(std::uint64_t degree);

/// prod_k (1 + F(k) x^(2^k)) truncated at degree N.
TruncatedSeries<BigNat> genfunc_numeric(std::uint64_t degree);

/// prod_k (1 + (z^(2^k) + 1) x^(2^k)) truncated at degree N.
TruncatedSeries<IntPoly> genfunc_poly(std::uint64_t degree);

struct BoundedSum {
  Rat partial;
  /// The sum of the omitted tail is strictly below this.
  Rat tail_bound;
};

/// sum_{n<=N} 1/c(n) with tail bound 2^-N (c(n) >= 2^n).
BoundedSum sum_inv_c(std::uint64_t terms);

enum class Sign { Plus, Minus };

/// prod_{k<K} (1 + sign F_k(z)^-s). Requires |z| > 1 and s >= 1.
Rat prod_one_plus_invF(unsigned factors, Sign sign, const Rat& z, unsigned s);

/// sum_{n<=N} (-1)^(s(n) mod 2) / p_n(z). Requires |z| > 1.
Rat signed_sum_inv_p(const Rat& z, std::uint64_t terms);

/// prod_{n<K} (1 + x^(2^n)) == (1 - x^(2^K)) / (1 - x). Requires |x| < 1.
bool binary_product_check(const Rat& x, unsigned factors);

/// Sum over the first `count` semigroup elements e of q_e(z)^-s. |z| > 1.
Rat euler_sum_q(const Rat& z, unsigned s, std::size_t count);
/// Same with weight nu(e).
Rat moebius_sum_q(const Rat& z, unsigned s, std::size_t count);

/// All partial sums of euler_sum_q (result[i] uses i+1 terms) in one pass.
std::vector<Rat> euler_partial_sums(const Rat& z, unsigned s, std::size_t count);
std::vector<Rat> moebius_partial_sums(const Rat& z, unsigned s, std::size_t count);

struct PolyStephan {
  Rat ratio;   // l_a(z) / l_(a-1)(z)
  Rat target;  // (z^2 - 1) F_(t-1)(z) / (F_(t-1)(z) - 2)
  /// (z^2 l_a + 1) / (z^2 l_(a-1) + 1) == target, exactly.
  bool exact_relation;
};

/// a = 2^(t-1) n + 2^(t-2). Requires |z| > 1, t >= 2 and a >= 2.
PolyStephan poly_stephan_ratio(const Rat& z, unsigned t, std::uint64_t n);

/// Truncated (toward zero, never rounded) decimal with exactly `digits`
/// fractional digits. Throws PreconditionError for digits == 0.
std::string decimal_render(const Rat& r, unsigned digits);

}  // namespace pascal2

#endif  // PASCAL2_SERIES_HPP
