#include "hkprod/field.hpp"

#include <stdexcept>
#include <string>

#include "hkprod/errors.hpp"

namespace hkprod {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 0) throw PreconditionFailed("characteristic 0 is not supported");
  if (p >= (1u << 31)) throw PreconditionFailed("characteristic must be below 2^31");
  if (!is_prime(p)) throw PreconditionFailed("characteristic " + std::to_string(p) + " is not prime");
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Coefficient PrimeField::pow(Coefficient a, std::uint64_t e) const {
  Coefficient result = 1 % p_;
  Coefficient base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coefficient PrimeField::inv(Coefficient a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t p) : value_(0), p_(p) {
  PrimeField f(p);
  value_ = f.reduce(value);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_) throw RingMismatch("field elements of different characteristic");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {static_cast<std::int64_t>(value_) + o.value_, p_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {static_cast<std::int64_t>(value_) - o.value_, p_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * o.value_ % p_), p_};
}

FieldElement FieldElement::operator-() const { return {-static_cast<std::int64_t>(value_), p_}; }

FieldElement FieldElement::inverse() const {
  return {static_cast<std::int64_t>(PrimeField(p_).inv(value_)), p_};
}

}  // namespace hkprod
