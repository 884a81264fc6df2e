#include "pascal2/semigroup.hpp"

#include <string>

namespace pascal2 {

SemigroupElement::SemigroupElement(Multiplicities mult, unsigned cap) : mult_(std::move(mult)), key_(1) {
  for (const auto& [index, count] : mult_) {
    if (count == 0)
      throw PreconditionError("SemigroupElement: zero multiplicity for index " + std::to_string(index));
    key_ *= pow(fermat(index, cap), count);
  }
}

SemigroupElement SemigroupElement::times(unsigned index, const BigNat& factor) const {
  SemigroupElement out = *this;
  ++out.mult_[index];
  out.key_ *= factor;
  return out;
}

QEnumerator::QEnumerator(unsigned cap) : cap_(cap) {}

const BigNat& QEnumerator::generator(unsigned index) {
  while (generators_.size() <= index)
    generators_.push_back(fermat(static_cast<unsigned>(generators_.size()), cap_));
  return generators_[index];
}

void QEnumerator::push_child(const SemigroupElement& parent, unsigned index) {
  heap_.push({parent.times(index, generator(index)), parent, index});
}

SemigroupElement QEnumerator::next() {
  if (!started_) {
    started_ = true;
    SemigroupElement root;
    push_child(root, 0);
    return root;
  }
  Frontier top = heap_.top();
  heap_.pop();
  push_child(top.parent, top.index + 1);
  push_child(top.element, top.index);
  return std::move(top.element);
}

std::vector<SemigroupElement> enumerate_q(std::size_t count, unsigned cap) {
  QEnumerator gen(cap);
  std::vector<SemigroupElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

IntPoly q_poly(const SemigroupElement& e) {
  IntPoly product(1);
  for (const auto& [index, count] : e.multiplicities()) product *= poly_pow(F_poly(index), count);
  return product;
}

Rat q_value(const SemigroupElement& e, const Rat& z) {
  Rat product(1);
  for (const auto& [index, count] : e.multiplicities()) {
    if (index >= 63) throw PreconditionError("q_value: index too large");
    const Rat f = pow(z, static_cast<std::int64_t>(std::uint64_t{1} << index)) + Rat(1);
    product *= pow(f, count);
  }
  return product;
}

bool is_squarefree(const SemigroupElement& e) {
  for (const auto& [index, count] : e.multiplicities())
    if (count != 1) return false;
  return true;
}

int nu(const SemigroupElement& e) {
  if (!is_squarefree(e)) return 0;
  return e.multiplicities().size() % 2 == 0 ? 1 : -1;
}

}  // namespace pascal2
