#include "hkprod/groebner.hpp"

#include "engine.hpp"
#include "hkprod/errors.hpp"

namespace hkprod {

namespace {

detail::VecPoly to_vec(const Polynomial& f) {
  detail::VecPoly v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(detail::VTerm{t.mono, 0, t.coef});
  return v;
}

Polynomial from_vec(const detail::VecPoly& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.coef, t.mono});
  return Polynomial(ring, std::move(terms));
}

}  // namespace

std::uint64_t StandardMonomialCount::value() const {
  if (!value_) throw InfiniteColength("quotient is not finite-dimensional");
  return *value_;
}

GroebnerBasis::GroebnerBasis(RingPresentation ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  auto reducer = std::make_shared<detail::Reducer>(ring_.base()->field(), detail::TermOrder(ring_.order()));
  for (const auto& e : elements_) reducer->add(to_vec(e));
  reducer_ = std::move(reducer);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.leading_term().mono);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().leading_term().mono.is_one();
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPresentation& ring) {
  std::vector<detail::VecPoly> input;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring.base())) throw RingMismatch("generator not in the ambient ring");
    input.push_back(to_vec(g));
  }
  for (const auto& q : ring.relations()) input.push_back(to_vec(q));
  const detail::TermOrder order(ring.order());
  auto basis = detail::compute_groebner(std::move(input), ring.base()->field(), order, true);
  std::vector<Polynomial> elements;
  elements.reserve(basis.size());
  for (const auto& b : basis) elements.push_back(from_vec(b, ring.base()));
  return GroebnerBasis(ring, std::move(elements));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring().base())) throw RingMismatch("normal form against a basis of another ring/order");
  return from_vec(gb.reducer().reduce(to_vec(f)), gb.ring().base());
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& basis = gb.reducer().basis();
  const auto& field = gb.reducer().field();
  const auto& order = gb.reducer().order();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!gb.reducer().reduce(detail::s_polynomial(basis[i], basis[j], field, order)).empty()) return false;
  return true;
}

StandardMonomialCount colength(const GroebnerBasis& gb) {
  auto n = detail::count_standard(gb.leading_monomials(), gb.ring().nvars());
  return n ? StandardMonomialCount::finite(*n) : StandardMonomialCount::infinite();
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
  return detail::enumerate_standard(gb.leading_monomials(), gb.ring().nvars());
}

}  // namespace hkprod
