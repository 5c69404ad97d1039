#include "hkprod/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "hkprod/errors.hpp"

namespace hkprod {

namespace {

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
  return r;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables)
    throw PreconditionFailed("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), exp_.begin());
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += exp_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::is_pure_power() const {
  int nonzero = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] != 0) ++nonzero;
  return nonzero == 1;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (n_ != other.n_) throw PreconditionFailed("monomial length mismatch");
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = checked_add(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
  if (!divides(numerator)) throw PreconditionFailed("monomial quotient is not exact");
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = numerator.exp_[i] - exp_[i];
  return r;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(exp_[i]) * factor;
    if (factor != 0 && v / factor != exp_[i]) throw std::overflow_error("monomial exponent overflow");
    if (v > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<Exponent>(v);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
  for (std::size_t i = 0; i < nvars; ++i) precedence_[i] = i;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<bool> seen(precedence_.size(), false);
  for (auto v : precedence_) {
    if (v >= precedence_.size() || seen[v]) throw PreconditionFailed("variable precedence is not a permutation");
    seen[v] = true;
  }
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  const std::size_t n = precedence_.size();
  if (kind_ == OrderKind::Lex) {
    for (std::size_t k = 0; k < n; ++k) {
      auto v = precedence_[k];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  // Last differing variable decides; smaller exponent there is the larger monomial.
  for (std::size_t k = n; k-- > 0;) {
    auto v = precedence_[k];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.size() != b.size() || a.size() != order.size())
    throw PreconditionFailed("monomial length mismatch in order comparison");
  return order.compare_unchecked(a, b);
}

}  // namespace hkprod
