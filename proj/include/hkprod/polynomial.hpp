#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkprod/field.hpp"
#include "hkprod/monomial.hpp"

namespace hkprod {

/// The ambient polynomial ring S = F_p[x_1, ..., x_n] with a fixed monomial order.
class PolynomialRing {
 public:
  PolynomialRing(std::uint32_t p, std::vector<std::string> variables);
  PolynomialRing(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_ && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Coefficient coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients, no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Canonicalizes arbitrary term lists (sorts, merges, drops zeros).
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Coefficient c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Requires a nonzero polynomial.
  const Term& leading_term() const;

  std::uint64_t total_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Coefficient constant_coefficient() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Coefficient c) const;
  Polynomial times_monomial(const Monomial& m, Coefficient c = 1) const;
  Polynomial pow(std::uint64_t n) const;
  /// f^q for q a power of the characteristic, computed termwise.
  Polynomial frobenius_power(std::uint64_t q) const;
  Polynomial partial_derivative(std::size_t var) const;
  /// Same polynomial re-expressed over a ring with the same field and
  /// variables but possibly another order.
  Polynomial with_ring(RingPtr other) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial frobenius_power(const Polynomial& f, std::uint64_t q);

/// Returns e with q == p^e, or nullopt when q is not a power of p.
std::optional<unsigned> log_base(std::uint64_t q, std::uint32_t p);
/// Throws PreconditionFailed when q is not a power of p.
void require_power_of(std::uint64_t q, std::uint32_t p);

}  // namespace hkprod
