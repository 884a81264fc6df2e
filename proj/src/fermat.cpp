#include "pascal2/fermat.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

namespace pascal2 {

namespace {

// a * 2^t + b with overflow detection.
std::uint64_t checked_index(std::uint64_t a, std::uint64_t t, std::uint64_t b) {
  if (t >= 64 || (a != 0 && a > (UINT64_MAX >> t)) || (a << t) > UINT64_MAX - b)
    throw PreconditionError("index 2^" + std::to_string(t) + "*" + std::to_string(a) + "+" +
                            std::to_string(b) + " overflows 64 bits");
  return (a << t) + b;
}

std::uint64_t bit_value(std::uint64_t e) {
  if (e >= 64) throw PreconditionError("exponent " + std::to_string(e) + " overflows 64 bits");
  return std::uint64_t{1} << e;
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

BigNat fermat(unsigned k, unsigned cap) {
  if (k > cap || k >= 64)
    throw CapExceeded("fermat: index " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  return BigNat::power_of_two(std::uint64_t{1} << k) + BigNat(1);
}

std::uint64_t FermatSupport::reconstruct() const {
  std::uint64_t n = 0;
  for (unsigned k : exponents) n |= std::uint64_t{1} << k;
  return n;
}

FermatSupport support(std::uint64_t n) {
  FermatSupport out;
  for (; n != 0; n &= n - 1) out.exponents.push_back(static_cast<unsigned>(std::countr_zero(n)));
  return out;
}

unsigned s(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

BigNat d(std::uint64_t n, unsigned cap) {
  BigNat product(1);
  for (unsigned k : support(n).exponents) product *= fermat(k, cap);
  return product;
}

BigNat c(std::uint64_t n, unsigned cap) { return d(n, cap); }

BigNat hewgill(std::uint64_t n, unsigned cap) {
  BigNat product(1);
  if (n == 0) return product;
  const unsigned top = static_cast<unsigned>(std::bit_width(n) - 1);
  for (unsigned i = 0; i <= top; ++i)
    product *= pow(fermat(i, cap), static_cast<unsigned long>((n >> i) % 2));
  return product;
}

RecursiveCStream::RecursiveCStream(unsigned cap) : cap_(cap) {}

BigNat RecursiveCStream::next() {
  static const std::array<unsigned long, 3> base = {1, 3, 5};
  const std::size_t k = emitted_.size();
  if (k < base.size()) {
    emitted_.emplace_back(base[k]);
    if (k == 2) {
      // c(2) = F(1) * c(0)
      m_ = 1;
      fm_ = fermat(1, cap_);
      r_ = 0;
    }
    return emitted_.back();
  }

  BigNat value;
  if (r_ == 0) {
    value = BigNat(3) * fm_;
    r_ = 1;
  } else if (emitted_[r_] == fm_ - BigNat(2)) {
    ++m_;
    fm_ = fermat(m_, cap_);
    value = fm_;
    r_ = 0;
  } else {
    value = fm_ * emitted_[r_ + 1];
    ++r_;
  }
  emitted_.push_back(value);
  return value;
}

std::vector<BigNat> c_stream_recursive(std::uint64_t limit, unsigned cap) {
  RecursiveCStream stream(cap);
  std::vector<BigNat> out;
  out.reserve(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) out.push_back(stream.next());
  return out;
}

BigNat l(std::uint64_t n, unsigned cap) {
  const BigNat c2n = c(checked_index(n, 1, 0), cap);
  if (c2n.mod_ui(4) != 1)
    throw std::logic_error("l: c(2n) is not 1 mod 4 for n=" + std::to_string(n));
  return (c2n - BigNat(1)) >> 2;
}

unsigned circ(std::uint64_t u, std::uint64_t v) { return static_cast<unsigned>(std::popcount(u & v)); }

bool orthogonal(std::uint64_t u, std::uint64_t v) { return circ(u, v) == 0; }

bool verify_addition_theorem(std::uint64_t u, std::uint64_t v, unsigned cap) {
  if (!orthogonal(u, v))
    throw PreconditionError("addition theorem: " + std::to_string(u) + " and " + std::to_string(v) +
                            " share a set bit");
  return c(u + v, cap) == c(u, cap) * c(v, cap);
}

std::string identity_id(FermatIdentity id) {
  switch (id) {
    case FermatIdentity::RepunitShift: return "L4.1";
    case FermatIdentity::FermatRatio: return "L4.2";
    case FermatIdentity::StephanKey: return "L4.3";
    case FermatIdentity::SharedTopFactor: return "C2.12";
    case FermatIdentity::HalfStepFactor: return "C2.13";
  }
  throw std::logic_error("identity_id: unknown identity");
}

std::optional<FermatIdentity> parse_fermat_identity(const std::string& id) {
  for (auto candidate : {FermatIdentity::RepunitShift, FermatIdentity::FermatRatio,
                         FermatIdentity::StephanKey, FermatIdentity::SharedTopFactor,
                         FermatIdentity::HalfStepFactor})
    if (identity_id(candidate) == id) return candidate;
  return std::nullopt;
}

std::optional<unsigned> largest_fermat_divisor(const BigNat& x, unsigned cap) {
  if (x.is_zero()) throw PreconditionError("largest_fermat_divisor: zero has every divisor");
  // F(k) has 2^k + 1 bits; skip those that cannot divide x.
  const std::uint64_t bits = x.bit_length();
  for (unsigned k = std::min(cap, 62U) + 1; k-- > 0;) {
    if ((std::uint64_t{1} << k) + 1 > bits) continue;
    if (divmod(x, fermat(k, cap)).remainder.is_zero()) return k;
  }
  return std::nullopt;
}

IdentitySides identity_sides(FermatIdentity id, const IdentityArgs& a, unsigned cap) {
  auto F = [cap](std::uint64_t k) {
    if (k > cap) throw CapExceeded("fermat index " + std::to_string(k) + " exceeds cap");
    return fermat(static_cast<unsigned>(k), cap);
  };
  auto C = [cap](std::uint64_t n) { return c(n, cap); };
  const BigNat two(2);

  switch (id) {
    case FermatIdentity::RepunitShift: {
      require(a.t >= 1, "L4.1 requires t >= 1");
      const std::uint64_t base = checked_index(a.n, a.t, 0);
      return {(F(a.t - 1) - two) * C(base), C(checked_index(a.n, a.t, bit_value(a.t - 1) - 1))};
    }
    case FermatIdentity::FermatRatio: {
      require(a.t >= 1, "L4.2 requires t >= 1");
      const std::uint64_t mid = checked_index(a.n, a.t, bit_value(a.t - 1));
      return {(F(a.t - 1) - two) * C(mid), F(a.t - 1) * C(mid - 1)};
    }
    case FermatIdentity::StephanKey: {
      require(a.t >= 2, "L4.3 requires t >= 2");
      const std::uint64_t mid = checked_index(a.n, a.t, bit_value(a.t - 1));
      return {(F(a.t - 1) - two) * C(mid), BigNat(3) * F(a.t - 1) * C(mid - 2)};
    }
    case FermatIdentity::SharedTopFactor: {
      require(a.k >= 2 && a.l >= 1, "C2.12 requires k >= 2 and l >= 1");
      const BigNat below_k = C(a.k - 1);
      const BigNat below_l = C(a.l - 1);
      const auto top = largest_fermat_divisor(below_l, cap);
      require(top.has_value() && *top == a.m, "C2.12 requires F(m) to be the largest Fermat divisor of c(l-1)");
      const BigNat fm = F(a.m);
      require(below_l == fm * below_k, "C2.12 requires c(l-1) = F(m) c(k-1)");
      require(BigNat(1) < below_k && below_k < fm - two, "C2.12 requires 1 < c(k-1) < F(m) - 2");
      return {below_k * C(a.l), below_l * C(a.k)};
    }
    case FermatIdentity::HalfStepFactor: {
      require(a.m >= 1, "C2.13 requires m >= 1");
      const std::uint64_t base = checked_index(a.l, a.m, 0);
      return {C(checked_index(a.l, a.m, bit_value(a.m - 1))), C(base) * F(a.m - 1)};
    }
  }
  throw std::logic_error("identity_sides: unknown identity");
}

bool verify_identity(FermatIdentity id, const IdentityArgs& args, unsigned cap) {
  return identity_sides(id, args, cap).holds();
}

Rat stephan_ratio(unsigned t, std::uint64_t n, unsigned cap) {
  require(t >= 2, "stephan_ratio requires t >= 2");
  const std::uint64_t top = checked_index(n, t - 1, bit_value(t - 2));
  const BigNat below = l(top - 1, cap);
  if (below.is_zero()) throw PreconditionError("stephan_ratio: zero denominator l(0) at t=2, n=0");
  return Rat(l(top, cap)) / Rat(below);
}

Rat stephan_limit(unsigned t, unsigned cap) {
  require(t >= 2, "stephan_limit requires t >= 2");
  const BigNat f = fermat(t - 1, cap);
  return Rat(BigNat(3) * f) / Rat(f - BigNat(2));
}

}  // namespace pascal2
