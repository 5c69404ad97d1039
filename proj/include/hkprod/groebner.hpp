#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkprod/polynomial.hpp"
#include "hkprod/ring.hpp"

namespace hkprod {

namespace detail {
class Reducer;
}

/// lambda of a quotient: a natural number or Infinite.
class StandardMonomialCount {
 public:
  static StandardMonomialCount infinite() { return StandardMonomialCount(); }
  static StandardMonomialCount finite(std::uint64_t n) { return StandardMonomialCount(n); }

  bool is_finite() const { return value_.has_value(); }
  /// Throws InfiniteColength when infinite.
  std::uint64_t value() const;
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const StandardMonomialCount&, const StandardMonomialCount&) = default;

 private:
  StandardMonomialCount() = default;
  explicit StandardMonomialCount(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

/// Reduced Groebner basis of I + Q in the ambient polynomial ring.
class GroebnerBasis {
 public:
  const std::vector<Polynomial>& elements() const { return elements_; }
  const MonomialOrder& order() const { return ring_.order(); }
  const RingPresentation& ring() const { return ring_; }
  bool reduced() const { return true; }
  std::vector<Monomial> leading_monomials() const;
  /// Unit ideal (basis {1}).
  bool is_unit() const;

  const detail::Reducer& reducer() const { return *reducer_; }

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPresentation& ring);

  GroebnerBasis(RingPresentation ring, std::vector<Polynomial> elements);

  RingPresentation ring_;
  std::vector<Polynomial> elements_;
  std::shared_ptr<const detail::Reducer> reducer_;
};

/// Relations of the ring are appended, so the result presents I + Q.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPresentation& ring);

/// Remainder of multivariate division; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Every S-pair of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Standard monomials outside the leading-term ideal.
StandardMonomialCount colength(const GroebnerBasis& gb);
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb);

}  // namespace hkprod
