#include "hkprod/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "hkprod/errors.hpp"

namespace hkprod {

PolynomialRing::PolynomialRing(std::uint32_t p, std::vector<std::string> variables)
    : PolynomialRing(p, variables, MonomialOrder(OrderKind::GRevLex, variables.size())) {}

PolynomialRing::PolynomialRing(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order)
    : field_(p), variables_(std::move(variables)), order_(std::move(order)) {
  if (variables_.size() > kMaxVariables)
    throw PreconditionFailed("at most " + std::to_string(kMaxVariables) + " variables are supported");
  if (order_.size() != variables_.size()) throw PreconditionFailed("monomial order does not match variable count");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw PreconditionFailed("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionFailed("duplicate variable '" + v + "'");
  }
}

std::optional<std::size_t> PolynomialRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  for (auto& t : terms_) {
    if (t.mono.size() != ring_->nvars()) throw PreconditionFailed("monomial length does not match ring");
    t.coef %= field.characteristic();
  }
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare_unchecked(a.mono, b.mono) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coef = field.add(merged.back().coef, t.coef);
    } else {
      if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
      merged.push_back(t);
    }
  }
  if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  auto coef = ring->field().reduce(c);
  Monomial one(ring->nvars());
  return Polynomial(ring, {Term{coef, one}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw PreconditionFailed("variable index out of range");
  Monomial m(ring->nvars());
  m[index] = 1;
  return Polynomial(ring, {Term{1, m}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coefficient c) {
  return Polynomial(ring, {Term{c, std::move(m)}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionFailed("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Coefficient Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = order.compare_unchecked(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      auto s = field.add(terms_[i].coef, o.terms_[j].coef);
      if (s != 0) out.push_back(Term{s, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  const auto& field = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{field.mul(a.coef, b.coef), a.mono * b.mono});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coefficient c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coefficient c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{ring_->field().mul(t.coef, c), t.mono * m});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n != 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(std::uint64_t q) const {
  require_power_of(q, ring_->characteristic());
  // Frobenius is additive in characteristic p and raising a monomial to the
  // q-th power preserves the order, so the term sequence stays canonical.
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{ring_->field().pow(t.coef, q), t.mono.scaled(q)});
  return r;
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw PreconditionFailed("variable index out of range");
  std::vector<Term> out;
  const auto& field = ring_->field();
  for (const auto& t : terms_) {
    auto e = t.mono[var];
    if (e == 0) continue;
    auto c = field.mul(t.coef, static_cast<Coefficient>(e % ring_->characteristic()));
    if (c == 0) continue;
    Monomial m = t.mono;
    m[var] = e - 1;
    out.push_back(Term{c, m});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::with_ring(RingPtr other) const {
  if (other->characteristic() != ring_->characteristic() || other->variables() != ring_->variables())
    throw RingMismatch("cannot move polynomial between rings with different field or variables");
  return Polynomial(std::move(other), terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& t : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    bool printed = false;
    if (t.coef != 1 || t.mono.is_one()) {
      os << t.coef;
      printed = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (printed) os << '*';
      os << ring_->variables()[i];
      if (t.mono[i] != 1) os << '^' << t.mono[i];
      printed = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial frobenius_power(const Polynomial& f, std::uint64_t q) { return f.frobenius_power(q); }

std::optional<unsigned> log_base(std::uint64_t q, std::uint32_t p) {
  if (q == 0 || p < 2) return std::nullopt;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return e;
}

void require_power_of(std::uint64_t q, std::uint32_t p) {
  if (!log_base(q, p))
    throw PreconditionFailed(std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
}

}  // namespace hkprod
