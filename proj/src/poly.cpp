#include "pascal2/poly.hpp"

#include <stdexcept>
#include <utility>

#include "pascal2/bitrow.hpp"

namespace pascal2 {

IntPoly::IntPoly(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

IntPoly::IntPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

IntPoly IntPoly::monomial(BigInt coeff, std::uint64_t exponent) {
  IntPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

std::int64_t IntPoly::degree() const {
  return terms_.empty() ? kZeroDegree : static_cast<std::int64_t>(terms_.rbegin()->first);
}

BigInt IntPoly::coeff(std::uint64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPoly::add_term(std::uint64_t exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c == -1) out += "-";
    else if (c != 1) out += c.get_str() + "*";
    out += "z";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly poly_pow(const IntPoly& base, unsigned exponent) {
  IntPoly result(1);
  IntPoly square = base;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1U) result *= square;
    if (exponent > 1) square *= square;
  }
  return result;
}

IntPoly poly_compose_square(const IntPoly& a) {
  IntPoly::Terms doubled;
  for (const auto& [e, c] : a.terms()) {
    if (e > UINT64_MAX / 2) throw PreconditionError("poly_compose_square: exponent overflow");
    doubled.emplace(2 * e, c);
  }
  return IntPoly(std::move(doubled));
}

Rat poly_eval(const IntPoly& a, const Rat& x) {
  Rat sum;
  Rat power(1);
  std::uint64_t at = 0;
  for (const auto& [e, c] : a.terms()) {
    power *= pow(x, static_cast<std::int64_t>(e - at));
    at = e;
    sum += Rat(c) * power;
  }
  return sum;
}

std::optional<IntPoly> poly_exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_exact_divide: zero divisor");
  const auto [lead_exp, lead_coeff] = *b.terms().rbegin();
  IntPoly remainder = a;
  IntPoly::Terms quotient;
  while (!remainder.is_zero() && remainder.degree() >= static_cast<std::int64_t>(lead_exp)) {
    const auto [re, rc] = *remainder.terms().rbegin();
    if (rc % lead_coeff != 0) return std::nullopt;
    const BigInt qc = rc / lead_coeff;
    const std::uint64_t qe = re - lead_exp;
    quotient.emplace(qe, qc);
    remainder -= IntPoly::monomial(qc, qe) * b;
  }
  if (!remainder.is_zero()) return std::nullopt;
  return IntPoly(std::move(quotient));
}

IntPoly p_binomial(std::uint64_t n) {
  IntPoly::Terms terms;
  for (std::uint64_t i = 0; i <= n; ++i)
    if (lucas_parity(n, i) == 1) terms.emplace_hint(terms.end(), i, BigInt(1));
  return IntPoly(std::move(terms));
}

IntPoly p_factored(std::uint64_t n) {
  IntPoly product(1);
  for (unsigned k : support(n).exponents) product *= F_poly(k);
  return product;
}

IntPoly F_poly(unsigned n) {
  if (n >= 64) throw PreconditionError("F_poly: exponent 2^" + std::to_string(n) + " overflows");
  return IntPoly::monomial(1, std::uint64_t{1} << n) + IntPoly(1);
}

IntPoly l_poly(std::uint64_t n) {
  if (n == 0) throw PreconditionError("l_poly requires n >= 1");
  if (n > UINT64_MAX / 2) throw PreconditionError("l_poly: index overflow");
  const IntPoly even = p_binomial(2 * n);
  if (even.coeff(0) != 1 || even.coeff(1) != 0)
    throw std::logic_error("l_poly: p_2n is not 1 mod z^2 for n=" + std::to_string(n));
  IntPoly::Terms shifted;
  for (const auto& [e, c] : even.terms())
    if (e >= 2) shifted.emplace(e - 2, c);
  return IntPoly(std::move(shifted));
}

std::string identity_id(PolyIdentity id) {
  switch (id) {
    case PolyIdentity::EvenDoubling: return "E6.7";
    case PolyIdentity::OddDoubling: return "E6.8";
    case PolyIdentity::FermatRecursion: return "E6.9";
    case PolyIdentity::RepunitQuotient: return "E7.1";
    case PolyIdentity::HalfStepFactor: return "E7.2";
    case PolyIdentity::LowestFactor: return "E7.3";
    case PolyIdentity::RepunitShift: return "E7.4";
    case PolyIdentity::FermatRatio: return "E7.5";
    case PolyIdentity::StephanKey: return "E7.6";
    case PolyIdentity::StephanCross: return "E7.9";
  }
  throw std::logic_error("identity_id: unknown identity");
}

std::optional<PolyIdentity> parse_poly_identity(const std::string& id) {
  for (auto candidate :
       {PolyIdentity::EvenDoubling, PolyIdentity::OddDoubling, PolyIdentity::FermatRecursion,
        PolyIdentity::RepunitQuotient, PolyIdentity::HalfStepFactor, PolyIdentity::LowestFactor,
        PolyIdentity::RepunitShift, PolyIdentity::FermatRatio, PolyIdentity::StephanKey,
        PolyIdentity::StephanCross})
    if (identity_id(candidate) == id) return candidate;
  return std::nullopt;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

// a * 2^t + b, guarding against overflow.
std::uint64_t index_of(std::uint64_t a, std::uint64_t t, std::uint64_t b) {
  if (t >= 63 || a > (UINT64_MAX >> (t + 1)) || b > (std::uint64_t{1} << 62))
    throw PreconditionError("identity index overflows");
  return (a << t) + b;
}

std::uint64_t bit(std::uint64_t e) {
  if (e >= 63) throw PreconditionError("identity parameter too large");
  return std::uint64_t{1} << e;
}

}  // namespace

PolyIdentitySides poly_identity_sides(PolyIdentity id, const IdentityArgs& a) {
  const IntPoly one(1);
  const IntPoly two(2);
  const IntPoly z = IntPoly::z();
  const IntPoly z2 = IntPoly::monomial(1, 2);
  auto p = [](std::uint64_t n) { return p_binomial(n); };
  auto F = [](std::uint64_t k) {
    if (k >= 63) throw PreconditionError("identity parameter too large");
    return F_poly(static_cast<unsigned>(k));
  };

  switch (id) {
    case PolyIdentity::EvenDoubling:
      return {p(index_of(a.n, 1, 0)), poly_compose_square(p(a.n))};
    case PolyIdentity::OddDoubling:
      return {p(index_of(a.n, 1, 1)), (z + one) * poly_compose_square(p(a.n))};
    case PolyIdentity::FermatRecursion: {
      require(a.n >= 1, "E6.9 requires n >= 1");
      IntPoly product(1);
      for (std::uint64_t i = 0; i < a.n; ++i) product *= p(bit(i));
      return {p(bit(a.n)), two + (z - one) * product};
    }
    case PolyIdentity::RepunitQuotient: {
      require(a.n >= 1, "E7.1 requires n >= 1");
      const auto quotient = poly_exact_divide(F(a.n) - two, z - one);
      return {p(bit(a.n) - 1), quotient.value_or(IntPoly()), quotient.has_value()};
    }
    case PolyIdentity::HalfStepFactor: {
      require(a.m >= 1, "E7.2 requires m >= 1");
      return {p(index_of(a.l, a.m, bit(a.m - 1))), p(index_of(a.l, a.m, 0)) * F(a.m - 1)};
    }
    case PolyIdentity::LowestFactor: {
      require(a.t >= 2, "E7.3 requires t >= 2");
      const std::uint64_t top = index_of(a.n, a.t, bit(a.t - 1) - 1);
      return {p(top), (z + one) * p(top - 1)};
    }
    case PolyIdentity::RepunitShift: {
      require(a.t >= 1, "E7.4 requires t >= 1");
      return {(F(a.t - 1) - two) * p(index_of(a.n, a.t, 0)),
              (z - one) * p(index_of(a.n, a.t, bit(a.t - 1) - 1))};
    }
    case PolyIdentity::FermatRatio: {
      require(a.t >= 1, "E7.5 requires t >= 1");
      const std::uint64_t mid = index_of(a.n, a.t, bit(a.t - 1));
      return {(F(a.t - 1) - two) * p(mid), (z - one) * F(a.t - 1) * p(mid - 1)};
    }
    case PolyIdentity::StephanKey: {
      require(a.t >= 2, "E7.6 requires t >= 2");
      const std::uint64_t mid = index_of(a.n, a.t, bit(a.t - 1));
      return {(F(a.t - 1) - two) * p(mid), (z2 - one) * F(a.t - 1) * p(mid - 2)};
    }
    case PolyIdentity::StephanCross: {
      require(a.t >= 2, "E7.9 requires t >= 2");
      const std::uint64_t half = index_of(a.n, a.t - 1, bit(a.t - 2));
      require(half >= 2, "E7.9 requires 2^(t-1) n + 2^(t-2) >= 2");
      return {(F(a.t - 1) - two) * (z2 * l_poly(half) + one),
              (z2 - one) * F(a.t - 1) * (z2 * l_poly(half - 1) + one)};
    }
  }
  throw std::logic_error("poly_identity_sides: unknown identity");
}

bool verify_poly_identity(PolyIdentity id, const IdentityArgs& args) {
  return poly_identity_sides(id, args).holds();
}

}  // namespace pascal2
