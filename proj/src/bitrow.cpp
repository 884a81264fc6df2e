#include "pascal2/bitrow.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace pascal2 {

namespace {

std::size_t words_for(std::uint64_t n) { return static_cast<std::size_t>(n / 64 + 1); }

// words |= words << shift, for shift > 0. Walks downward so every source word
// is read before it is overwritten.
void or_shifted(std::vector<std::uint64_t>& words, std::uint64_t shift) {
  const std::size_t q = shift / 64;
  const unsigned b = shift % 64;
  for (std::size_t i = words.size(); i-- > q;) {
    std::uint64_t moved = words[i - q] << b;
    if (b != 0 && i - q >= 1) moved |= words[i - q - 1] >> (64 - b);
    words[i] |= moved;
  }
}

}  // namespace

bool BitRow::is_palindrome() const {
  for (std::uint64_t i = 0, j = n_; i < j; ++i, --j)
    if (bit(i) != bit(j)) return false;
  return true;
}

BitRow step(const BitRow& r) {
  const std::uint64_t n = r.n_ + 1;
  std::vector<std::uint64_t> out(words_for(n), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < r.words_.size(); ++i) {
    const std::uint64_t w = r.words_[i];
    out[i] = w ^ ((w << 1) | carry);
    carry = w >> 63;
  }
  if (out.size() > r.words_.size()) out.back() = carry;
  return BitRow(n, std::move(out));
}

BitRow row(std::uint64_t n) {
  // Row n is the GF(2) product of (1 + z^(2^k)) over the set bits k of n.
  // The shifted copies never overlap, so OR is the same as XOR here.
  std::vector<std::uint64_t> words(words_for(n), 0);
  words[0] = 1;
  for (std::uint64_t rest = n; rest != 0; rest &= rest - 1)
    or_shifted(words, std::uint64_t{1} << std::countr_zero(rest));
  return BitRow(n, std::move(words));
}

BitRow row_by_iteration(std::uint64_t n) {
  BitRow r = row(0);
  for (std::uint64_t i = 0; i < n; ++i) r = step(r);
  return r;
}

int lucas_parity(std::uint64_t n, std::uint64_t i) {
  if (i > n)
    throw std::invalid_argument("lucas_parity: i=" + std::to_string(i) + " exceeds n=" +
                                std::to_string(n));
  return (i & (n - i)) == 0 ? 1 : 0;
}

BigNat kernel_value(const BitRow& r) {
  if (!r.is_palindrome())
    throw std::logic_error("kernel_value: row " + std::to_string(r.index()) + " is not a palindrome");
  return BigNat::from_words(r.words());
}

std::uint64_t ones(const BitRow& r) {
  std::uint64_t count = 0;
  for (std::uint64_t w : r.words()) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

}  // namespace pascal2
