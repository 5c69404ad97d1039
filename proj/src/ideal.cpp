#include "hkprod/ideal.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hkprod/errors.hpp"
#include "hkprod/module.hpp"
#include "hkprod/parse.hpp"

namespace hkprod {

IdealHandle::IdealHandle(RingPresentation ring, std::vector<Polynomial> generators) {
  auto data = std::make_shared<Data>(std::move(ring));
  for (auto& g : generators) {
    if (!same_ring(g.ring(), data->ring.base())) throw RingMismatch("ideal generator not in the ring");
    if (!g.is_zero()) data->generators.push_back(std::move(g));
  }
  data_ = std::move(data);
}

const GroebnerBasis& IdealHandle::groebner() const {
  std::call_once(data_->gb_once, [this] { data_->gb = buchberger(data_->generators, data_->ring); });
  return *data_->gb;
}

std::string IdealHandle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < generators().size(); ++i) os << (i ? ", " : "") << generators()[i].to_string();
  os << ')';
  return os.str();
}

IdealHandle make_ideal(const RingPresentation& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, ring));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle maximal_ideal(const RingPresentation& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring.nvars(); ++i) gens.push_back(Polynomial::variable(ring.base(), i));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle unit_ideal(const RingPresentation& ring) {
  return IdealHandle(ring, {Polynomial::constant(ring.base(), 1)});
}

StandardMonomialCount colength(const IdealHandle& ideal) { return colength(ideal.groebner()); }

bool is_member(const Polynomial& f, const IdealHandle& ideal) { return normal_form(f, ideal.groebner()).is_zero(); }

bool contains(const IdealHandle& outer, const IdealHandle& inner) {
  require_same_ring(outer.ring(), inner.ring());
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return is_member(g, outer); });
}

bool same_ideal(const IdealHandle& a, const IdealHandle& b) { return contains(a, b) && contains(b, a); }

namespace {

void push_unique(std::vector<Polynomial>& out, Polynomial f) {
  if (f.is_zero()) return;
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

}  // namespace

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) push_unique(gens, g);
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) push_unique(gens, f * g);
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, std::uint64_t n) {
  if (n == 0) throw PreconditionFailed("ideal power exponent must be at least 1");
  IdealHandle result = a;
  for (std::uint64_t k = 1; k < n; ++k) result = ideal_product(result, a);
  return result;
}

IdealHandle bracket_power(const IdealHandle& a, std::uint64_t q) {
  require_power_of(q, a.ring().characteristic());
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g.frobenius_power(q));
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& a, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionFailed("colon by the zero element");
  if (!same_ring(f.ring(), a.ring().base())) throw RingMismatch("colon element");
  std::vector<Polynomial> seq{f};
  seq.insert(seq.end(), a.generators().begin(), a.generators().end());
  auto syz = syzygies(seq, a.ring());
  std::vector<Polynomial> gens;
  for (const auto& s : syz.generators()) push_unique(gens, s[0]);
  // Elements of I itself always belong to the colon; keeping them makes the
  // result independent of how the syzygy basis was trimmed.
  for (const auto& g : a.generators()) push_unique(gens, g);
  return IdealHandle(a.ring(), std::move(gens));
}

bool is_m_primary(const IdealHandle& ideal) {
  auto len = colength(ideal);
  if (!len.is_finite()) return false;
  for (const auto& g : ideal.generators())
    if (g.constant_coefficient() != 0) return false;
  const auto& ring = ideal.ring();
  bool homogeneous = ring.is_graded();
  for (const auto& g : ideal.generators()) homogeneous = homogeneous && g.is_homogeneous();
  if (homogeneous) return true;
  // A local Artinian quotient of length L is killed by m^L.
  const auto& gb = ideal.groebner();
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    Polynomial x = Polynomial::variable(ring.base(), v);
    Polynomial r = Polynomial::constant(ring.base(), 1);
    for (std::uint64_t k = 0; k < len.value() && !r.is_zero(); ++k) r = normal_form(r * x, gb);
    if (!r.is_zero()) return false;
  }
  return true;
}

void require_m_primary(const IdealHandle& ideal, std::string_view what) {
  if (!colength(ideal).is_finite()) throw InfiniteColength(std::string(what) + " " + ideal.to_string());
  if (!is_m_primary(ideal)) throw PreconditionFailed(std::string(what) + " " + ideal.to_string() + " is not m-primary");
}

std::size_t min_gens(const IdealHandle& ideal) {
  auto len = colength(ideal);
  if (!len.is_finite()) throw InfiniteColength("min_gens of " + ideal.to_string());
  auto m_times = ideal_product(maximal_ideal(ideal.ring()), ideal);
  return static_cast<std::size_t>(colength(m_times).value() - len.value());
}

std::vector<Polynomial> minimal_generators(const IdealHandle& ideal) {
  const auto mu = min_gens(ideal);
  std::vector<Polynomial> gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size() && gens.size() > mu;) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (k != i) others.push_back(gens[k]);
    IdealHandle rest(ideal.ring(), others);
    if (is_member(gens[i], rest)) {
      gens = std::move(others);
    } else {
      ++i;
    }
  }
  if (gens.size() != mu)
    throw PreconditionFailed("no subset of the generators of " + ideal.to_string() + " has mu = " +
                             std::to_string(mu) + " elements");
  return gens;
}

namespace {

std::optional<std::size_t> dimension_of_initial_ideal(const std::vector<Monomial>& leads, std::size_t n) {
  for (const auto& l : leads)
    if (l.is_one()) return std::nullopt;
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    auto size = static_cast<std::size_t>(__builtin_popcount(subset));
    if (size <= best) continue;
    bool independent = true;
    for (const auto& l : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (l[v] != 0 && !(subset & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace

std::size_t krull_dim(const RingPresentation& ring) {
  return ring.dimension([&] {
    auto gb = buchberger(std::span<const Polynomial>{}, ring);
    auto d = dimension_of_initial_ideal(gb.leading_monomials(), ring.nvars());
    if (!d) throw PreconditionFailed("the relations generate the unit ideal; the ring is zero");
    return *d;
  });
}

bool is_parameter_ideal(const IdealHandle& ideal) {
  if (!is_m_primary(ideal)) return false;
  return min_gens(ideal) == krull_dim(ideal.ring());
}

bool is_cohen_macaulay_presentation(const RingPresentation& ring) { return ring.relations().size() <= 1; }

std::vector<std::size_t> parameter_variables(const RingPresentation& ring) {
  const auto n = ring.nvars();
  const auto d = krull_dim(ring);
  std::vector<std::size_t> chosen;
  // Lexicographic enumeration of d-subsets.
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    std::vector<Polynomial> gens;
    for (auto v : idx) gens.push_back(Polynomial::variable(ring.base(), v));
    if (colength(IdealHandle(ring, gens)).is_finite()) return idx;
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == n - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  throw PreconditionFailed("no subset of the variables is a system of parameters");
}

bool relation_is_squarefree(const RingPresentation& ring) {
  if (ring.relations().size() != 1) throw PreconditionFailed("squarefree check needs exactly one relation");
  const auto& f = ring.relations().front();
  std::vector<Polynomial> jac{f};
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    auto df = f.partial_derivative(v);
    if (!df.is_zero()) jac.push_back(df);
  }
  RingPresentation polynomial_ring(ring.base());
  auto gb = buchberger(jac, polynomial_ring);
  auto d = dimension_of_initial_ideal(gb.leading_monomials(), ring.nvars());
  return !d || *d + 2 <= ring.nvars();
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Monomial:
      return "monomial";
    case Family::Binomial:
      return "binomial";
    case Family::Dense:
      return "dense";
    case Family::ParameterPowers:
      return "parameter-powers";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::Monomial, Family::Binomial, Family::Dense, Family::ParameterPowers})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // mt19937_64 output is fixed by the standard; distributions are not, so
  // bounded draws are done by hand.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 rng_;
};

Monomial random_monomial(Draw& draw, std::size_t nvars, std::uint64_t degree) {
  Monomial m(nvars);
  for (std::uint64_t k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(draw.below(nvars))];
  return m;
}

void monomials_of_degree(std::size_t nvars, std::uint64_t degree, std::size_t v, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (v + 1 == nvars) {
    cur[v] = static_cast<Monomial::Exponent>(degree);
    out.push_back(cur);
    cur[v] = 0;
    return;
  }
  for (std::uint64_t e = degree + 1; e-- > 0;) {
    cur[v] = static_cast<Monomial::Exponent>(e);
    monomials_of_degree(nvars, degree - e, v + 1, cur, out);
  }
  cur[v] = 0;
}

IdealHandle draw_monomial(Draw& draw, const RingPresentation& ring, unsigned bound) {
  const auto n = ring.nvars();
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < n; ++v) {
    Monomial m(n);
    m[v] = static_cast<Monomial::Exponent>(draw.between(1, bound));
    gens.push_back(Polynomial::monomial(ring.base(), m));
  }
  auto extra = draw.between(0, 3);
  for (std::uint64_t k = 0; k < extra; ++k)
    push_unique(gens, Polynomial::monomial(ring.base(), random_monomial(draw, n, draw.between(1, bound))));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle pure_power_fallback(const RingPresentation& ring, std::vector<Polynomial> gens, unsigned bound) {
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    Monomial m(ring.nvars());
    m[v] = bound;
    gens.push_back(Polynomial::monomial(ring.base(), m));
  }
  return IdealHandle(ring, std::move(gens));
}

template <class MakeGenerator>
IdealHandle draw_until_primary(Draw& draw, const RingPresentation& ring, unsigned bound, MakeGenerator make) {
  constexpr int kAttempts = 64;
  std::vector<Polynomial> gens;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    gens.clear();
    auto count = ring.nvars() + draw.below(2);
    for (std::uint64_t k = 0; k < count; ++k) push_unique(gens, make());
    IdealHandle candidate(ring, gens);
    if (is_m_primary(candidate)) return candidate;
  }
  return pure_power_fallback(ring, std::move(gens), bound);
}

IdealHandle draw_binomial(Draw& draw, const RingPresentation& ring, unsigned bound) {
  const auto n = ring.nvars();
  const auto p = ring.characteristic();
  return draw_until_primary(draw, ring, bound, [&] {
    auto deg = draw.between(1, bound);
    auto m1 = random_monomial(draw, n, deg);
    auto m2 = random_monomial(draw, n, deg);
    auto c = static_cast<Coefficient>(draw.between(1, p - 1));
    return Polynomial(ring.base(), {Term{1, m1}, Term{p - c, m2}});
  });
}

IdealHandle draw_dense(Draw& draw, const RingPresentation& ring, unsigned bound) {
  const auto n = ring.nvars();
  const auto p = ring.characteristic();
  return draw_until_primary(draw, ring, bound, [&] {
    auto deg = draw.between(1, bound);
    std::vector<Monomial> monos;
    Monomial cur(n);
    monomials_of_degree(n, deg, 0, cur, monos);
    std::vector<Term> terms;
    for (const auto& m : monos) terms.push_back(Term{static_cast<Coefficient>(draw.below(p)), m});
    Polynomial f(ring.base(), terms);
    if (f.is_zero()) f = Polynomial::monomial(ring.base(), monos[draw.below(monos.size())]);
    return f;
  });
}

IdealHandle draw_parameter_powers(Draw& draw, const RingPresentation& ring, unsigned bound) {
  std::vector<Polynomial> gens;
  for (auto v : parameter_variables(ring)) {
    Monomial m(ring.nvars());
    m[v] = static_cast<Monomial::Exponent>(draw.between(1, bound));
    gens.push_back(Polynomial::monomial(ring.base(), m));
  }
  return IdealHandle(ring, std::move(gens));
}

}  // namespace

std::vector<IdealHandle> random_ideals(const TrialSpec& spec, const RingPresentation& ring) {
  if (spec.degree_bound == 0) throw PreconditionFailed("degree bound must be positive");
  if (ring.nvars() == 0) throw PreconditionFailed("random ideals need at least one variable");
  Draw draw(spec.seed);
  std::vector<IdealHandle> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    switch (spec.family) {
      case Family::Monomial:
        out.push_back(draw_monomial(draw, ring, spec.degree_bound));
        break;
      case Family::Binomial:
        out.push_back(draw_binomial(draw, ring, spec.degree_bound));
        break;
      case Family::Dense:
        out.push_back(draw_dense(draw, ring, spec.degree_bound));
        break;
      case Family::ParameterPowers:
        out.push_back(draw_parameter_powers(draw, ring, spec.degree_bound));
        break;
    }
  }
  return out;
}

}  // namespace hkprod
