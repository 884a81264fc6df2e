#ifndef PASCAL2_SEMIGROUP_HPP
#define PASCAL2_SEMIGROUP_HPP

#include <cstdint>
#include <map>
#include <queue>
#include <vector>

#include "pascal2/bignum.hpp"
#include "pascal2/fermat.hpp"
#include "pascal2/poly.hpp"

namespace pascal2 {

/// A finite product of Fermat polynomials F_i(z), stored as index -> multiplicity.
///
/// The key is the product evaluated at z = 2. Fermat numbers are pairwise
/// coprime, so distinct multisets have distinct keys.
class SemigroupElement {
 public:
  using Multiplicities = std::map<unsigned, unsigned>;

  /// The empty product.
  SemigroupElement() : key_(1) {}
  /// Throws PreconditionError on a zero multiplicity.
  explicit SemigroupElement(Multiplicities mult, unsigned cap = kDefaultFermatCap);

  const Multiplicities& multiplicities() const { return mult_; }
  const BigNat& key() const { return key_; }
  bool empty() const { return mult_.empty(); }
  /// Largest index present; 0 for the empty product.
  unsigned top_index() const { return mult_.empty() ? 0 : mult_.rbegin()->first; }

  /// This element times F_index, with `factor` = fermat(index).
  SemigroupElement times(unsigned index, const BigNat& factor) const;

  friend bool operator==(const SemigroupElement& a, const SemigroupElement& b) {
    return a.mult_ == b.mult_;
  }

 private:
  Multiplicities mult_;
  BigNat key_;
};

/// Yields the semigroup generated by {F_k(z)} in ascending key order,
/// starting with the empty product.
///
/// Each element other than the empty product has one parent: itself with a
/// single copy of its largest factor removed. The children of e are e * F_j
/// for j >= top_index(e), ascending in key. Popping e * F_j pushes its next
/// sibling e * F_(j+1) and its first child e * F_j * F_j, so every element is
/// produced exactly once and F_(K+1) enters the frontier when F_K leaves it.
class QEnumerator {
 public:
  explicit QEnumerator(unsigned cap = kDefaultFermatCap);

  SemigroupElement next();

 private:
  struct Frontier {
    SemigroupElement element;
    SemigroupElement parent;
    unsigned index;  // element = parent * F_index
  };
  struct LaterKey {
    bool operator()(const Frontier& a, const Frontier& b) const {
      return a.element.key() > b.element.key();
    }
  };

  const BigNat& generator(unsigned index);
  void push_child(const SemigroupElement& parent, unsigned index);

  unsigned cap_;
  bool started_ = false;
  std::vector<BigNat> generators_;
  std::priority_queue<Frontier, std::vector<Frontier>, LaterKey> heap_;
};

std::vector<SemigroupElement> enumerate_q(std::size_t count, unsigned cap = kDefaultFermatCap);

/// Product of F_poly(i)^mult(i).
IntPoly q_poly(const SemigroupElement& e);

/// The product evaluated at z via the factored form; avoids expanding q_poly.
Rat q_value(const SemigroupElement& e, const Rat& z);

bool is_squarefree(const SemigroupElement& e);

/// 0 unless squarefree, else (-1)^(number of distinct factors).
int nu(const SemigroupElement& e);

}  // namespace pascal2

#endif  // PASCAL2_SEMIGROUP_HPP
