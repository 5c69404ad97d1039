#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hkprod {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector with inline storage. Arithmetic that would overflow an
/// exponent throws std::overflow_error.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const { return n_; }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  Exponent& operator[](std::size_t i) { return exp_[i]; }
  std::span<const Exponent> exponents() const { return {exp_.data(), n_}; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// True when the monomial is x_i^e for a single variable (e > 0).
  bool is_pure_power() const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, numerator); precondition-checked.
  Monomial quotient_of(const Monomial& numerator) const;
  Monomial scaled(std::uint64_t factor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.exp_ == b.exp_; }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t n_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, GRevLex };

/// A monomial order together with a variable precedence (highest first).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::size_t size() const { return precedence_.size(); }

  /// Assumes equal lengths; hot path for the Groebner engine.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::GRevLex;
  std::vector<std::size_t> precedence_;
};

/// Throws PreconditionFailed on length mismatch.
std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace hkprod
