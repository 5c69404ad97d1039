#include "hkprod/module.hpp"

#include <sstream>

#include "engine.hpp"
#include "hkprod/errors.hpp"

namespace hkprod {

namespace {

detail::VecPoly to_vec(const ModuleElement& v, std::uint32_t offset = 0) {
  detail::VecPoly out;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const auto& t : v[i].terms()) out.push_back(detail::VTerm{t.mono, static_cast<std::uint32_t>(i) + offset, t.coef});
  return out;
}

detail::VecPoly poly_in_component(const Polynomial& f, std::uint32_t comp) {
  detail::VecPoly out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(detail::VTerm{t.mono, comp, t.coef});
  return out;
}

ModuleElement from_vec(const detail::VecPoly& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset = 0) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts.at(t.comp - offset).push_back(Term{t.coef, t.mono});
  std::vector<Polynomial> entries;
  entries.reserve(rank);
  for (auto& p : parts) entries.emplace_back(ring, std::move(p));
  return ModuleElement(std::move(entries));
}

}  // namespace

ModuleElement::ModuleElement(std::vector<Polynomial> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (!same_ring(entries_[i].ring(), entries_[0].ring())) throw RingMismatch("module element entries");
}

ModuleElement ModuleElement::zero(const RingPtr& ring, std::size_t rank) {
  return ModuleElement(std::vector<Polynomial>(rank, Polynomial(ring)));
}

ModuleElement ModuleElement::basis_vector(const RingPtr& ring, std::size_t rank, std::size_t i, const Polynomial& coef) {
  std::vector<Polynomial> entries(rank, Polynomial(ring));
  entries.at(i) = coef;
  return ModuleElement(std::move(entries));
}

bool ModuleElement::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::string ModuleElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i].to_string();
  os << ')';
  return os.str();
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  if (o.rank() != rank()) throw PreconditionFailed("module rank mismatch");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(entries_[i] + o.entries_[i]);
  return ModuleElement(std::move(out));
}

ModuleElement ModuleElement::operator*(const Polynomial& f) const {
  std::vector<Polynomial> out;
  for (const auto& e : entries_) out.push_back(e * f);
  return ModuleElement(std::move(out));
}

ModuleSubspace::ModuleSubspace(RingPresentation ring, std::size_t rank, std::vector<ModuleElement> generators)
    : ring_(std::move(ring)), rank_(rank), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.rank() != rank_) throw PreconditionFailed("generator rank does not match module rank");
    for (const auto& e : g.entries())
      if (!same_ring(e.ring(), ring_.base())) throw RingMismatch("module generator");
  }
}

ModuleSubspace ModuleSubspace::operator+(const ModuleSubspace& o) const {
  require_same_ring(ring_, o.ring_);
  if (rank_ != o.rank_) throw PreconditionFailed("module rank mismatch");
  auto gens = generators_;
  gens.insert(gens.end(), o.generators_.begin(), o.generators_.end());
  return ModuleSubspace(ring_, rank_, std::move(gens));
}

ModuleSubspace ModuleSubspace::ideal_multiple(const RingPresentation& ring, std::size_t rank,
                                              std::span<const Polynomial> ideal_generators) {
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& g : ideal_generators) gens.push_back(ModuleElement::basis_vector(ring.base(), rank, i, g));
  return ModuleSubspace(ring, rank, std::move(gens));
}

ModuleGroebnerBasis::ModuleGroebnerBasis(RingPresentation ring, std::size_t rank, std::vector<ModuleElement> elements)
    : ring_(std::move(ring)), rank_(rank), elements_(std::move(elements)) {
  const detail::TermOrder order(ring_.order());
  auto reducer = std::make_shared<detail::Reducer>(ring_.base()->field(), order);
  for (const auto& e : elements_) reducer->add(detail::canonicalize(to_vec(e), ring_.base()->field(), order));
  reducer_ = std::move(reducer);
}

ModuleGroebnerBasis module_groebner(const ModuleSubspace& n) {
  const auto& ring = n.ring();
  std::vector<detail::VecPoly> input;
  for (const auto& g : n.generators()) input.push_back(to_vec(g));
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (const auto& q : ring.relations()) input.push_back(poly_in_component(q, static_cast<std::uint32_t>(i)));
  const detail::TermOrder order(ring.order(), detail::ModuleOrderKind::TermOverPosition);
  auto basis = detail::compute_groebner(std::move(input), ring.base()->field(), order, n.rank() == 1);
  std::vector<ModuleElement> elements;
  elements.reserve(basis.size());
  for (const auto& b : basis) elements.push_back(from_vec(b, ring.base(), n.rank()));
  return ModuleGroebnerBasis(ring, n.rank(), std::move(elements));
}

ModuleElement module_normal_form(const ModuleElement& v, const ModuleGroebnerBasis& gb) {
  if (v.rank() != gb.rank()) throw PreconditionFailed("module rank mismatch");
  for (const auto& e : v.entries())
    if (!same_ring(e.ring(), gb.ring().base())) throw RingMismatch("module normal form");
  auto f = detail::canonicalize(to_vec(v), gb.reducer().field(), gb.reducer().order());
  return from_vec(gb.reducer().reduce(std::move(f)), gb.ring().base(), gb.rank());
}

bool module_contains(const ModuleGroebnerBasis& gb, const ModuleElement& v) {
  return module_normal_form(v, gb).is_zero();
}

ModuleSubspace syzygies(std::span<const Polynomial> a, const RingPresentation& ring) {
  if (a.empty()) throw PreconditionFailed("syzygies of an empty sequence");
  const std::size_t rank = a.size();
  // Graph module in S^(1+l): (a_i, e_i), (q, 0) and (0, q e_i). With component
  // 0 eliminated first, basis elements free of component 0 generate the lifted
  // kernel.
  std::vector<detail::VecPoly> input;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!same_ring(a[i].ring(), ring.base())) throw RingMismatch("syzygy input");
    auto v = poly_in_component(a[i], 0);
    v.push_back(detail::VTerm{Monomial(ring.nvars()), static_cast<std::uint32_t>(i + 1), 1});
    input.push_back(std::move(v));
  }
  for (const auto& q : ring.relations()) {
    input.push_back(poly_in_component(q, 0));
    for (std::size_t i = 0; i < rank; ++i) input.push_back(poly_in_component(q, static_cast<std::uint32_t>(i + 1)));
  }
  const auto& field = ring.base()->field();
  const detail::TermOrder order(ring.order(), detail::ModuleOrderKind::EliminateFirst);
  auto basis = detail::compute_groebner(std::move(input), field, order, false);

  // Drop lifts lying in Q * S^l.
  detail::Reducer relations(field, detail::TermOrder(ring.order()));
  if (!ring.relations().empty()) {
    auto rel_gb = buchberger(std::span<const Polynomial>{}, ring);
    for (std::size_t i = 0; i < rank; ++i)
      for (const auto& g : rel_gb.elements()) relations.add(poly_in_component(g, static_cast<std::uint32_t>(i + 1)));
  }
  std::vector<ModuleElement> gens;
  for (const auto& b : basis) {
    if (b.front().comp == 0) continue;
    if (!ring.relations().empty()) {
      auto canon = detail::canonicalize(b, field, detail::TermOrder(ring.order()));
      if (relations.reduce(std::move(canon)).empty()) continue;
    }
    gens.push_back(from_vec(b, ring.base(), rank, 1));
  }
  return ModuleSubspace(ring, rank, std::move(gens));
}

StandardMonomialCount module_colength(const ModuleGroebnerBasis& gb) {
  std::vector<std::vector<Monomial>> per_comp(gb.rank());
  for (const auto& g : gb.reducer().basis()) per_comp[g.front().comp].push_back(g.front().mono);
  std::uint64_t total = 0;
  for (const auto& leads : per_comp) {
    auto n = detail::count_standard(leads, gb.ring().nvars());
    if (!n) return StandardMonomialCount::infinite();
    total += *n;
  }
  return StandardMonomialCount::finite(total);
}

StandardMonomialCount module_colength(const ModuleSubspace& n) { return module_colength(module_groebner(n)); }

}  // namespace hkprod
