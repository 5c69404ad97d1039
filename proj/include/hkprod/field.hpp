#pragma once

#include <cstdint>
#include <ostream>

namespace hkprod {

using Coefficient = std::uint32_t;

/// Arithmetic in F_p for a prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coefficient reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coefficient>(r < 0 ? r + p_ : r);
  }
  Coefficient add(Coefficient a, Coefficient b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coefficient sub(Coefficient a, Coefficient b) const { return a >= b ? a - b : a + p_ - b; }
  Coefficient neg(Coefficient a) const { return a == 0 ? 0 : p_ - a; }
  Coefficient mul(Coefficient a, Coefficient b) const {
    return static_cast<Coefficient>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coefficient pow(Coefficient a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Coefficient inv(Coefficient a) const;

  static bool is_prime(std::uint64_t n);

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// A residue together with its modulus; convenience value type for callers
/// that do not carry a PrimeField around.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t characteristic() const { return p_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value_; }

 private:
  void check_same(const FieldElement& o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

}  // namespace hkprod
