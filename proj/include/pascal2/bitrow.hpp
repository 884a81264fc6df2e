#ifndef PASCAL2_BITROW_HPP
#define PASCAL2_BITROW_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pascal2/bignum.hpp"

namespace pascal2 {

/// One row of Pascal's triangle mod 2, packed 64 bits per word.
///
/// Bit i (counted from the least significant bit of word 0) holds C(n, i)
/// mod 2. Bits at positions > n are always zero. Rows are only produced by
/// row() and step(), so every instance satisfies the row invariants: length
/// n+1, both end bits set, palindromic, 2^s(n) ones.
class BitRow {
 public:
  std::uint64_t index() const { return n_; }
  std::uint64_t length() const { return n_ + 1; }
  bool bit(std::uint64_t i) const {
    return i <= n_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }
  std::span<const std::uint64_t> words() const { return words_; }

  bool is_palindrome() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  friend BitRow step(const BitRow& r);
  friend BitRow row(std::uint64_t n);

  BitRow(std::uint64_t n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}

  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// One cellular-automaton step: position i of the result is r[i] XOR r[i-1].
BitRow step(const BitRow& r);

/// Row n, built directly from the set of submasks of n.
BitRow row(std::uint64_t n);

/// Row n by n applications of step() to row 0. O(n^2 / 64); test oracle.
BitRow row_by_iteration(std::uint64_t n);

/// C(n, i) mod 2 as 1 iff (i & (n - i)) == 0. Throws std::invalid_argument if i > n.
int lucas_parity(std::uint64_t n, std::uint64_t i);

/// Sum of bit(i) * 2^i.
BigNat kernel_value(const BitRow& r);

std::uint64_t ones(const BitRow& r);

}  // namespace pascal2

#endif  // PASCAL2_BITROW_HPP
