#ifndef PASCAL2_FERMAT_HPP
#define PASCAL2_FERMAT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal2/bignum.hpp"

namespace pascal2 {

/// F(k) has 2^k + 1 bits, so indices are capped to keep memory bounded.
inline constexpr unsigned kDefaultFermatCap = 25;

/// Raised when an argument is outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a Fermat index exceeds the configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// 2^(2^k) + 1.
BigNat fermat(unsigned k, unsigned cap = kDefaultFermatCap);

/// Exponents of the set bits of n, ascending.
struct FermatSupport {
  std::vector<unsigned> exponents;

  std::uint64_t reconstruct() const;
  friend bool operator==(const FermatSupport&, const FermatSupport&) = default;
};

FermatSupport support(std::uint64_t n);

/// Binary digit sum.
unsigned s(std::uint64_t n);

/// Product of F(k) over support(n); d(0) = 1.
BigNat d(std::uint64_t n, unsigned cap = kDefaultFermatCap);

/// Row n of Pascal's triangle mod 2 read as a binary number. Computed as d(n).
BigNat c(std::uint64_t n, unsigned cap = kDefaultFermatCap);

/// Product over i <= floor(log2 n) of F(i)^(floor(n / 2^i) mod 2).
BigNat hewgill(std::uint64_t n, unsigned cap = kDefaultFermatCap);

/// Emits c(0), c(1), ... using only the three-case recursion on the largest
/// Fermat divisor F(m) of the current term and its cofactor c(r):
///
///   c(k+1) = 3 F(m)          if c(k) = F(m)
///          = F(m+1)          if c(r) = F(m) - 2
///          = F(m) c(r+1)     otherwise
///
/// Cofactors c(r+1) are looked up in the terms already emitted. Single consumer.
class RecursiveCStream {
 public:
  explicit RecursiveCStream(unsigned cap = kDefaultFermatCap);

  /// Index of the term the next call to next() returns.
  std::uint64_t position() const { return emitted_.size(); }
  BigNat next();

 private:
  unsigned cap_;
  std::vector<BigNat> emitted_;
  unsigned m_ = 0;            // largest Fermat index dividing the last term
  BigNat fm_;                 // F(m_)
  std::uint64_t r_ = 0;       // last term = F(m_) * c(r_)
};

/// c(0), ..., c(limit) from RecursiveCStream.
std::vector<BigNat> c_stream_recursive(std::uint64_t limit, unsigned cap = kDefaultFermatCap);

/// (c(2n) - 1) / 4. Throws std::logic_error if c(2n) is not 1 mod 4.
BigNat l(std::uint64_t n, unsigned cap = kDefaultFermatCap);

/// Dot product of the binary digit vectors of u and v: popcount(u & v).
unsigned circ(std::uint64_t u, std::uint64_t v);
bool orthogonal(std::uint64_t u, std::uint64_t v);

/// c(u+v) == c(u) c(v). Throws PreconditionError unless u is orthogonal to v.
bool verify_addition_theorem(std::uint64_t u, std::uint64_t v, unsigned cap = kDefaultFermatCap);

/// Exact identities between terms of c. External ids in parentheses.
enum class FermatIdentity {
  /// (L4.1) (F(t-1)-2) c(2^t n) = c(2^t n + 2^(t-1) - 1); t >= 1.
  RepunitShift,
  /// (L4.2) (F(t-1)-2) c(2^t n + 2^(t-1)) = F(t-1) c(2^t n + 2^(t-1) - 1); t >= 1.
  FermatRatio,
  /// (L4.3) (F(t-1)-2) c(2^t n + 2^(t-1)) = 3 F(t-1) c(2^t n + 2^(t-1) - 2); t >= 2.
  StephanKey,
  /// (C2.12) c(k-1) c(l) = c(l-1) c(k) when c(l-1) = F(m) c(k-1), F(m) is the
  /// largest Fermat divisor of c(l-1) and 1 < c(k-1) < F(m) - 2.
  SharedTopFactor,
  /// (C2.13) c(2^m l + 2^(m-1)) = c(2^m l) F(m-1); m >= 1.
  HalfStepFactor,
};

std::string identity_id(FermatIdentity id);
std::optional<FermatIdentity> parse_fermat_identity(const std::string& id);

/// Parameters by name; each identity reads only the fields it documents.
struct IdentityArgs {
  std::uint64_t t = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::uint64_t m = 0;
};

/// Both sides of an identity, evaluated exactly.
struct IdentitySides {
  BigNat lhs;
  BigNat rhs;
  bool holds() const { return lhs == rhs; }
};

/// Throws PreconditionError when args violate the identity's hypothesis.
IdentitySides identity_sides(FermatIdentity id, const IdentityArgs& args,
                             unsigned cap = kDefaultFermatCap);
bool verify_identity(FermatIdentity id, const IdentityArgs& args, unsigned cap = kDefaultFermatCap);

/// Index of the largest Fermat number dividing x, found by trial division
/// over F(0..cap); nullopt if none divides.
std::optional<unsigned> largest_fermat_divisor(const BigNat& x, unsigned cap = kDefaultFermatCap);

/// l(2^(t-1) n + 2^(t-2)) / l(2^(t-1) n + 2^(t-2) - 1), exactly.
/// Requires t >= 2 and a nonzero denominator (rejects t = 2, n = 0).
Rat stephan_ratio(unsigned t, std::uint64_t n, unsigned cap = kDefaultFermatCap);

/// 3 F(t-1) / (F(t-1) - 2); t >= 2.
Rat stephan_limit(unsigned t, unsigned cap = kDefaultFermatCap);

}  // namespace pascal2

#endif  // PASCAL2_FERMAT_HPP
