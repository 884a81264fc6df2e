#include "pascal2/series.hpp"

#include <bit>

#include "pascal2/fermat.hpp"
#include "pascal2/semigroup.hpp"

namespace pascal2 {

namespace {

void require_outside_unit_disk(const Rat& z, const char* who) {
  if (abs(z) <= Rat(1)) throw PreconditionError(std::string(who) + " requires |z| > 1");
}

// F_k(z) = z^(2^k) + 1 for k < count.
std::vector<Rat> fermat_values(const Rat& z, unsigned count) {
  std::vector<Rat> out;
  out.reserve(count);
  Rat power = z;  // z^(2^k)
  for (unsigned k = 0; k < count; ++k) {
    out.push_back(power + Rat(1));
    power *= power;
  }
  return out;
}

template <class Weight>
std::vector<Rat> semigroup_partial_sums(const Rat& z, unsigned s, std::size_t count, Weight weight,
                                        const char* who) {
  require_outside_unit_disk(z, who);
  if (s == 0) throw PreconditionError(std::string(who) + " requires s >= 1");
  QEnumerator gen;
  std::vector<Rat> partials;
  partials.reserve(count);
  Rat sum;
  for (std::size_t i = 0; i < count; ++i) {
    const SemigroupElement e = gen.next();
    const int w = weight(e);
    if (w != 0) sum += Rat(w) / pow(q_value(e, z), s);
    partials.push_back(sum);
  }
  return partials;
}

}  // namespace

unsigned factor_count(std::uint64_t degree) { return static_cast<unsigned>(std::bit_width(degree)); }

TruncatedSeries<BigNat> genfunc_numeric(std::uint64_t degree) {
  TruncatedSeries<BigNat> series{std::vector<BigNat>(degree + 1, BigNat(0))};
  series.coeffs[0] = BigNat(1);
  const unsigned factors = factor_count(degree);
  for (unsigned k = 0; k < factors; ++k) {
    const std::uint64_t shift = std::uint64_t{1} << k;
    const BigNat f = fermat(k);
    // Multiply by (1 + F(k) x^shift), in place from the top down.
    for (std::uint64_t i = degree; i >= shift; --i) series.coeffs[i] += f * series.coeffs[i - shift];
  }
  return series;
}

TruncatedSeries<IntPoly> genfunc_poly(std::uint64_t degree) {
  TruncatedSeries<IntPoly> series{std::vector<IntPoly>(degree + 1)};
  series.coeffs[0] = IntPoly(1);
  const unsigned factors = factor_count(degree);
  for (unsigned k = 0; k < factors; ++k) {
    const std::uint64_t shift = std::uint64_t{1} << k;
    const IntPoly f = F_poly(k);
    for (std::uint64_t i = degree; i >= shift; --i) series.coeffs[i] += f * series.coeffs[i - shift];
  }
  return series;
}

BoundedSum sum_inv_c(std::uint64_t terms) {
  Rat partial;
  for (std::uint64_t n = 0; n <= terms; ++n) partial += Rat(BigInt(1), c(n).value());
  return {partial, pow2(-static_cast<std::int64_t>(terms))};
}

Rat prod_one_plus_invF(unsigned factors, Sign sign, const Rat& z, unsigned s) {
  require_outside_unit_disk(z, "prod_one_plus_invF");
  if (s == 0) throw PreconditionError("prod_one_plus_invF requires s >= 1");
  Rat product(1);
  for (const Rat& f : fermat_values(z, factors)) {
    const Rat term = Rat(1) / pow(f, s);
    product *= sign == Sign::Plus ? Rat(1) + term : Rat(1) - term;
  }
  return product;
}

Rat signed_sum_inv_p(const Rat& z, std::uint64_t terms) {
  require_outside_unit_disk(z, "signed_sum_inv_p");
  const std::vector<Rat> f = fermat_values(z, factor_count(terms));
  Rat sum;
  for (std::uint64_t n = 0; n <= terms; ++n) {
    Rat p(1);
    for (unsigned k : support(n).exponents) p *= f[k];
    sum += (s(n) % 2 == 0 ? Rat(1) : Rat(-1)) / p;
  }
  return sum;
}

bool binary_product_check(const Rat& x, unsigned factors) {
  if (abs(x) >= Rat(1)) throw PreconditionError("binary_product_check requires |x| < 1");
  Rat product(1);
  Rat power = x;  // x^(2^n)
  for (unsigned n = 0; n < factors; ++n) {
    product *= Rat(1) + power;
    power *= power;
  }
  return product == (Rat(1) - power) / (Rat(1) - x);
}

std::vector<Rat> euler_partial_sums(const Rat& z, unsigned s, std::size_t count) {
  return semigroup_partial_sums(z, s, count, [](const SemigroupElement&) { return 1; },
                                "euler_sum_q");
}

std::vector<Rat> moebius_partial_sums(const Rat& z, unsigned s, std::size_t count) {
  return semigroup_partial_sums(z, s, count, [](const SemigroupElement& e) { return nu(e); },
                                "moebius_sum_q");
}

Rat euler_sum_q(const Rat& z, unsigned s, std::size_t count) {
  const auto partials = euler_partial_sums(z, s, count);
  return partials.empty() ? Rat(0) : partials.back();
}

Rat moebius_sum_q(const Rat& z, unsigned s, std::size_t count) {
  const auto partials = moebius_partial_sums(z, s, count);
  return partials.empty() ? Rat(0) : partials.back();
}

PolyStephan poly_stephan_ratio(const Rat& z, unsigned t, std::uint64_t n) {
  require_outside_unit_disk(z, "poly_stephan_ratio");
  if (t < 2 || t >= 40) throw PreconditionError("poly_stephan_ratio requires 2 <= t < 40");
  if (n > (UINT64_MAX >> t)) throw PreconditionError("poly_stephan_ratio: index overflow");
  const std::uint64_t top = (n << (t - 1)) + (std::uint64_t{1} << (t - 2));
  if (top < 2) throw PreconditionError("poly_stephan_ratio: degenerate denominator l_0 at t=2, n=0");

  const Rat upper = poly_eval(l_poly(top), z);
  const Rat lower = poly_eval(l_poly(top - 1), z);
  if (lower.is_zero()) throw PreconditionError("poly_stephan_ratio: denominator vanishes at z");

  const Rat f = poly_eval(F_poly(t - 1), z);
  const Rat z2 = z * z;
  const Rat target = (z2 - Rat(1)) * f / (f - Rat(2));
  const bool exact = (z2 * upper + Rat(1)) / (z2 * lower + Rat(1)) == target;
  return {upper / lower, target, exact};
}

std::string decimal_render(const Rat& r, unsigned digits) {
  if (digits == 0) throw PreconditionError("decimal_render requires digits >= 1");
  BigInt num = r.numerator();
  const BigInt den = r.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt whole, rest;
  mpz_fdiv_qr(whole.get_mpz_t(), rest.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt frac = rest * scale / den;  // floor: both nonnegative

  std::string frac_str = frac.get_str();
  frac_str.insert(0, digits - frac_str.size(), '0');
  std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
  return out + whole.get_str() + "." + frac_str;
}

}  // namespace pascal2
