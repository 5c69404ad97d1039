#include "hkprod/verify.hpp"

#include <json.hpp>
#include <sstream>

#include "hkprod/errors.hpp"
#include "hkprod/koszul.hpp"
#include "hkprod/module.hpp"

namespace hkprod {

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equal:
      return "=";
    case Relation::LessEqual:
      return "<=";
    case Relation::GreaterEqual:
      return ">=";
    case Relation::Less:
      return "<";
  }
  return "?";
}

bool relation_holds(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::Equal:
      return lhs == rhs;
    case Relation::LessEqual:
      return lhs <= rhs;
    case Relation::GreaterEqual:
      return lhs >= rhs;
    case Relation::Less:
      return lhs < rhs;
  }
  return false;
}

namespace {

constexpr const char* kSurrogateCaveat = "finite-q surrogate: compares normalized lengths at one q, not limits";

Rational len(const IdealHandle& ideal) { return make_rational(colength(ideal).value()); }

Rational len_q(const IdealHandle& ideal, std::uint64_t q) { return len(bracket_power(ideal, q)); }

Rational q_power_d(std::uint64_t q, std::size_t d) {
  Rational r(1);
  for (std::size_t k = 0; k < d; ++k) r *= make_rational(q);
  return r;
}

std::string pair_fixture(const IdealHandle& i, const IdealHandle& j) {
  return "I=" + i.to_string() + " J=" + j.to_string() + " in " + i.ring().describe();
}

std::string single_fixture(std::string_view name, const IdealHandle& i) {
  return std::string(name) + "=" + i.to_string() + " in " + i.ring().describe();
}

VerifyReport report(std::string check, std::string fixture, Rational lhs, Relation rel, Rational rhs) {
  VerifyReport r;
  r.check = std::move(check);
  r.fixture = std::move(fixture);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = rel;
  r.holds = relation_holds(lhs, rel, rhs);
  return r;
}

void require_parameter(const IdealHandle& j, std::string_view check) {
  if (!is_parameter_ideal(j)) throw PreconditionFailed(std::string(check) + ": " + j.to_string() + " is not a parameter ideal");
  if (!is_cohen_macaulay_presentation(j.ring()))
    throw PreconditionFailed(std::string(check) + ": ring is not a polynomial ring or hypersurface");
}

std::size_t require_dim_two(const RingPresentation& ring, std::string_view check) {
  auto d = krull_dim(ring);
  if (d < 2) throw PreconditionFailed(std::string(check) + " needs dimension at least 2");
  return d;
}

Rational geometric_sum(std::uint64_t ell, std::uint64_t n) {
  Rational total(0), term(1);
  for (std::uint64_t k = 0; k < n; ++k) {
    total += term;
    term *= make_rational(ell);
  }
  return total;
}

std::uint64_t top_level(const RingPresentation& ring, unsigned e_max) {
  return frobenius_level(ring.characteristic(), e_max);
}

// lambda(R^l / (K_a + I R^l)), which is lambda(J/IJ) for J = (a).
std::uint64_t presentation_quotient(std::span<const Polynomial> a, const IdealHandle& i) {
  auto n = syzygies(a, i.ring()) + ModuleSubspace::ideal_multiple(i.ring(), a.size(), i.generators());
  return module_colength(n).value();
}

}  // namespace

VerifyReport verify_len_identity(const IdealHandle& i, const IdealHandle& j, std::uint64_t q) {
  require_same_ring(i.ring(), j.ring());
  auto a = minimal_generators(j);
  auto s = len_identity_sides(i, a, q);
  auto r = report("len-identity", pair_fixture(i, j), make_rational(s.lhs), Relation::Equal,
                  make_rational(s.rhs_kernel) + make_rational(s.rhs_product));
  r.q = q;
  r.side["ell"] = make_rational(s.ell);
  r.side["lambda(R/I^[q])"] = make_rational(s.colength_i);
  r.side["lambda(R/J^[q])"] = make_rational(s.colength_j);
  r.side["lambda(K)"] = make_rational(s.rhs_kernel);
  r.side["lambda(R/(IJ)^[q])"] = make_rational(s.rhs_product);
  return r;
}

VerifyReport verify_prop_ineq(const IdealHandle& i, const IdealHandle& j) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  const auto& ring = i.ring();
  if (j.generators().size() == 1 && !colength(j).is_finite()) {
    // Principal J of infinite colength: compare lambda(J/IJ) with lambda(R/I).
    auto a = j.generators();
    auto lhs = make_rational(presentation_quotient(a, i));
    auto r = report("prop-ineq", pair_fixture(i, j), lhs, Relation::LessEqual, len(i));
    auto ann = ideal_colon(IdealHandle(ring, {}), a.front());
    r.side["mu(J)"] = Rational(1);
    r.side["annihilator_in_I"] = contains(i, ann);
    r.side["equality"] = r.lhs == r.rhs;
    return r;
  }
  require_m_primary(j, "J");
  auto mu = make_rational(min_gens(j));
  auto r = report("prop-ineq", pair_fixture(i, j), len(ideal_product(i, j)), Relation::LessEqual,
                  mu * len(i) + len(j));
  r.side["mu(J)"] = mu;
  if (mu == Rational(1)) {
    auto a = minimal_generators(j);
    r.side["annihilator_in_I"] = contains(i, ideal_colon(IdealHandle(ring, {}), a.front()));
  }
  r.side["equality"] = r.lhs == r.rhs;
  return r;
}

VerifyReport verify_cor_power(const IdealHandle& i, std::uint64_t n) {
  if (n == 0) throw PreconditionFailed("cor-power needs n >= 1");
  require_m_primary(i, "I");
  auto ell = min_gens(i);
  auto r = report("cor-power", single_fixture("I", i) + " n=" + std::to_string(n), len(ideal_power(i, n)),
                  Relation::LessEqual, geometric_sum(ell, n) * len(i));
  r.side["ell"] = make_rational(ell);
  r.side["n"] = make_rational(n);
  return r;
}

VerifyReport verify_thm_eqconds(const IdealHandle& i, const IdealHandle& j) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  require_m_primary(j, "J");
  auto mu = min_gens(j);
  if (mu < 2) throw PreconditionFailed("eqconds needs a non-principal J");
  const bool contained = contains(i, j);
  const bool regular_sequence = is_cohen_macaulay_presentation(j.ring()) && is_parameter_ideal(j);
  // Equality forces J in I; with a regular sequence, J in I forces equality.
  Relation rel = Relation::LessEqual;
  if (!contained)
    rel = Relation::Less;
  else if (regular_sequence)
    rel = Relation::Equal;
  auto r = report("eqconds", pair_fixture(i, j), len(ideal_product(i, j)), rel,
                  make_rational(mu) * len(i) + len(j));
  r.side["mu(J)"] = make_rational(mu);
  r.side["J_in_I"] = contained;
  r.side["regular_sequence"] = regular_sequence;
  r.side["equality"] = r.lhs == r.rhs;
  return r;
}

VerifyReport verify_freeness(const IdealHandle& j, const IdealHandle& i) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  std::vector<Polynomial> a;
  Rational module_len;
  std::uint64_t kernel = 0;
  if (colength(j).is_finite()) {
    a = minimal_generators(j);
    module_len = len(ideal_product(i, j)) - len(j);
    kernel = kernel_length(a, i, 1);
  } else {
    if (j.generators().size() != 1) throw PreconditionFailed("freeness: J must be m-primary or principal");
    a = j.generators();
    auto quotient = presentation_quotient(a, i);
    module_len = make_rational(quotient);
    kernel = colength(i).value() - quotient;
  }
  auto rhs = make_rational(a.size()) * len(i);
  // Free exactly when the presentation kernel vanishes.
  auto r = report("freeness", pair_fixture(i, j), module_len, kernel == 0 ? Relation::Equal : Relation::Less, rhs);
  r.side["mu(J)"] = make_rational(a.size());
  r.side["lambda(K)"] = make_rational(kernel);
  r.side["free"] = module_len == rhs;
  return r;
}

VerifyReport verify_cor_square(const IdealHandle& j) {
  require_parameter(j, "square");
  auto d = require_dim_two(j.ring(), "square");
  auto r = report("square", single_fixture("J", j), len(ideal_power(j, 2)), Relation::Equal,
                  make_rational(d + 1) * len(j));
  r.side["d"] = make_rational(d);
  return r;
}

std::vector<VerifyReport> verify_eq7_per_q(const IdealHandle& i, const IdealHandle& j, unsigned e_max) {
  std::vector<VerifyReport> out;
  for (unsigned e = 0; e <= e_max; ++e) {
    auto r = verify_len_identity(i, j, frobenius_level(i.ring().characteristic(), e));
    r.check = "eq7";
    out.push_back(std::move(r));
  }
  return out;
}

VerifyReport verify_hk_product_bound(const IdealHandle& i, const IdealHandle& j, const StarSpreadMode& mode,
                                     unsigned e_max) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  require_m_primary(j, "J");
  const auto& ring = i.ring();
  auto ell = make_rational(star_spread(j, mode));
  auto ij = ideal_product(i, j);
  VerifyReport r;
  if (ring.is_regular()) {
    r = report("hk-product", pair_fixture(i, j), len(ij), Relation::LessEqual, ell * len(i) + len(j));
  } else {
    auto q = top_level(ring, e_max);
    auto qd = q_power_d(q, krull_dim(ring));
    r = report("hk-product", pair_fixture(i, j), len_q(ij, q) / qd, Relation::LessEqual,
               ell * len_q(i, q) / qd + len_q(j, q) / qd);
    r.q = q;
    r.surrogate = true;
    r.caveat = kSurrogateCaveat;
  }
  r.side["l*(J)"] = ell;
  r.side["mode"] = to_string(mode);
  r.side["J_in_I"] = contains(i, j);
  r.side["equality"] = r.lhs == r.rhs;
  return r;
}

VerifyReport verify_cor_power_hk(const IdealHandle& i, std::uint64_t n, const StarSpreadMode& mode, unsigned e_max) {
  if (n == 0) throw PreconditionFailed("cor-power-hk needs n >= 1");
  require_m_primary(i, "I");
  const auto& ring = i.ring();
  auto ell = star_spread(i, mode);
  auto coeff = geometric_sum(ell, n);
  auto power = ideal_power(i, n);
  VerifyReport r;
  auto fixture = single_fixture("I", i) + " n=" + std::to_string(n);
  if (ring.is_regular()) {
    r = report("cor-power-hk", fixture, len(power), Relation::LessEqual, coeff * len(i));
  } else {
    auto q = top_level(ring, e_max);
    auto qd = q_power_d(q, krull_dim(ring));
    r = report("cor-power-hk", fixture, len_q(power, q) / qd, Relation::LessEqual, coeff * len_q(i, q) / qd);
    r.q = q;
    r.surrogate = true;
    r.caveat = kSurrogateCaveat;
  }
  r.side["l*(I)"] = make_rational(ell);
  r.side["mode"] = to_string(mode);
  return r;
}

VerifyReport verify_thm_eqthentc(const IdealHandle& i, const IdealHandle& j, const StarSpreadMode& mode,
                                 unsigned e_max) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  require_m_primary(j, "J");
  const auto& ring = i.ring();
  auto ell = star_spread(j, mode);
  if (ell < 2) throw PreconditionFailed("eqthentc needs l*(J) >= 2");
  auto ij = ideal_product(i, j);
  const bool contained = contains(i, j);
  VerifyReport r;
  if (ring.is_regular()) {
    // I* = I here, so equality must not occur unless J is in I.
    r = report("eqthentc", pair_fixture(i, j), len(ij), contained ? Relation::LessEqual : Relation::Less,
               make_rational(ell) * len(i) + len(j));
  } else {
    auto q = top_level(ring, e_max);
    auto qd = q_power_d(q, krull_dim(ring));
    r = report("eqthentc", pair_fixture(i, j), len_q(ij, q) / qd, Relation::LessEqual,
               make_rational(ell) * len_q(i, q) / qd + len_q(j, q) / qd);
    r.q = q;
    r.surrogate = true;
    r.caveat = std::string(kSurrogateCaveat) + "; tight closure probes are reported, not asserted";
    if (r.lhs == r.rhs && e_max >= 1) {
      std::vector<Polynomial> multipliers;
      if (ring.relations().size() == 1) multipliers = jacobian_candidates(ring).elements;
      if (multipliers.empty()) multipliers.push_back(Polynomial::constant(ring.base(), 1));
      for (const auto& g : j.generators())
        for (const auto& c : multipliers)
          r.side["probe z=" + g.to_string() + " c=" + c.to_string()] = tc_probe(g, i, c, e_max).to_string();
    }
  }
  r.side["l*(J)"] = make_rational(ell);
  r.side["mode"] = to_string(mode);
  r.side["J_in_I"] = contained;
  r.side["equality"] = r.lhs == r.rhs;
  return r;
}

VerifyReport verify_param_lower_bound(const IdealHandle& i, const IdealHandle& j, unsigned e_max) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  require_parameter(j, "param-lower");
  const auto& ring = i.ring();
  auto d = require_dim_two(ring, "param-lower");
  const bool contained = contains(i, j);
  const auto rel = contained ? Relation::Equal : Relation::GreaterEqual;
  auto ij = ideal_product(i, j);
  auto sum = ideal_sum(i, j);
  VerifyReport r;
  if (ring.is_regular()) {
    r = report("param-lower", pair_fixture(i, j), len(ij), rel, make_rational(d) * len(sum) + len(j));
  } else {
    auto q = top_level(ring, e_max);
    auto qd = q_power_d(q, d);
    r = report("param-lower", pair_fixture(i, j), len_q(ij, q) / qd, rel,
               make_rational(d) * len_q(sum, q) / qd + len_q(j, q) / qd);
    r.q = q;
    r.surrogate = true;
    r.caveat = kSurrogateCaveat;
  }
  r.side["d"] = make_rational(d);
  r.side["J_in_I"] = contained;
  return r;
}

std::vector<VerifyReport> verify_cor_square_hk(const IdealHandle& j, unsigned e_max) {
  require_parameter(j, "square-hk");
  const auto& ring = j.ring();
  auto d = require_dim_two(ring, "square-hk");
  auto e = make_rational(hilbert_samuel_parameter(j, 1).multiplicity);
  auto j2 = ideal_power(j, 2);
  std::vector<VerifyReport> out;
  const unsigned top = ring.is_regular() ? 0 : e_max;
  for (unsigned k = 0; k <= top; ++k) {
    auto q = frobenius_level(ring.characteristic(), k);
    auto r = report("square-hk", single_fixture("J", j), len_q(j2, q), Relation::Equal,
                    make_rational(d + 1) * len_q(j, q));
    r.q = q;
    r.side["d"] = make_rational(d);
    r.side["e(J)"] = e;
    if (!ring.is_regular()) {
      r.surrogate = true;
      r.caveat = "per-q form; the limit is not computed";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerifyReport> verify_prop42(const IdealHandle& i, const IdealHandle& j, unsigned e_max) {
  require_same_ring(i.ring(), j.ring());
  require_m_primary(i, "I");
  require_parameter(j, "prop42");
  const auto& ring = i.ring();
  const auto d = krull_dim(ring);
  const auto p = ring.characteristic();
  std::optional<unsigned> e0;
  for (unsigned e = 0; e <= e_max && !e0; ++e)
    if (contains(i, bracket_power(j, frobenius_level(p, e)))) e0 = e;
  if (!e0)
    throw Inconclusive("no q0 <= " + std::to_string(frobenius_level(p, e_max)) + " with J^[q0] in I");
  std::vector<VerifyReport> out;
  for (unsigned e = *e0; e <= e_max; ++e) {
    auto q = frobenius_level(p, e);
    auto jq = bracket_power(j, q);
    auto r = report("prop42", pair_fixture(i, j), len(ideal_product(i, jq)), Relation::Equal,
                    make_rational(d) * len(i) + len(jq));
    r.q = q;
    r.side["q0"] = make_rational(frobenius_level(p, *e0));
    r.side["d"] = make_rational(d);
    if (!ring.is_regular()) {
      r.surrogate = true;
      r.caveat = "finite-length form at each q; Hilbert-Kunz limits are not computed";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerifyReport> verify_huneke_yao_per_q(const IdealHandle& i, unsigned e_max) {
  require_m_primary(i, "I");
  if (e_max == 0) throw PreconditionFailed("huneke-yao needs e_max >= 1");
  const auto& ring = i.ring();
  const auto m = maximal_ideal(ring);
  const auto base = len(i);
  std::vector<VerifyReport> out;
  for (unsigned e = 1; e <= e_max; ++e) {
    auto q = frobenius_level(ring.characteristic(), e);
    auto mq = len_q(m, q);
    auto r = report("huneke-yao", single_fixture("I", i), len_q(i, q), Relation::LessEqual, mq * base);
    r.q = q;
    r.side["lambda(R/m^[q])"] = mq;
    r.side["lambda(R/I)"] = base;
    out.push_back(std::move(r));
  }
  if (ring.is_regular()) {
    // e_HK(R) = 1 and e_HK(I) = lambda(R/I), both read off at q = p.
    auto q = frobenius_level(ring.characteristic(), 1);
    auto qd = q_power_d(q, krull_dim(ring));
    auto r = report("huneke-yao", single_fixture("I", i), len_q(i, q) / qd, Relation::Equal,
                    len_q(m, q) / qd * base);
    r.q = q;
    r.side["limit_form"] = true;
    out.push_back(std::move(r));
  }
  return out;
}

std::string_view check_name(CheckKind k) {
  switch (k) {
    case CheckKind::LenIdentity:
      return "len-identity";
    case CheckKind::PropIneq:
      return "prop-ineq";
    case CheckKind::CorPower:
      return "cor-power";
    case CheckKind::EqConds:
      return "eqconds";
    case CheckKind::Freeness:
      return "freeness";
    case CheckKind::Square:
      return "square";
    case CheckKind::Eq7:
      return "eq7";
    case CheckKind::HKProduct:
      return "hk-product";
    case CheckKind::CorPowerHK:
      return "cor-power-hk";
    case CheckKind::EqThenTC:
      return "eqthentc";
    case CheckKind::ParamLower:
      return "param-lower";
    case CheckKind::SquareHK:
      return "square-hk";
    case CheckKind::Prop42:
      return "prop42";
    case CheckKind::HunekeYao:
      return "huneke-yao";
  }
  return "?";
}

const std::vector<CheckKind>& all_checks() {
  static const std::vector<CheckKind> kAll{
      CheckKind::LenIdentity, CheckKind::PropIneq,   CheckKind::CorPower,  CheckKind::EqConds, CheckKind::Freeness,
      CheckKind::Square,      CheckKind::Eq7,        CheckKind::HKProduct, CheckKind::CorPowerHK, CheckKind::EqThenTC,
      CheckKind::ParamLower,  CheckKind::SquareHK,   CheckKind::Prop42,    CheckKind::HunekeYao};
  return kAll;
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (auto k : all_checks())
    if (check_name(k) == name) return k;
  return std::nullopt;
}

bool check_needs_parameter_j(CheckKind k) {
  return k == CheckKind::Square || k == CheckKind::SquareHK || k == CheckKind::ParamLower || k == CheckKind::Prop42;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

IdealHandle draw_one(const RingPresentation& ring, std::uint64_t seed, Family family, unsigned bound) {
  return random_ideals(TrialSpec{seed, family, bound, 1}, ring).front();
}

StarSpreadMode resolve_mode(const SuiteConfig& config, const IdealHandle& j) {
  if (config.mode) return *config.mode;
  if (j.ring().is_regular()) return StarSpreadMode::regular();
  if (is_parameter_ideal(j)) return StarSpreadMode::parameter_equivalent();
  return StarSpreadMode::user_supplied(min_gens(j));
}

}  // namespace

TrialPair trial_pair(const RingPresentation& ring, const SuiteConfig& config, std::size_t index, bool parameter_j) {
  static constexpr Family kIFamilies[] = {Family::Monomial, Family::Binomial, Family::Dense};
  static constexpr Family kJFamilies[] = {Family::Monomial, Family::Binomial, Family::Dense, Family::ParameterPowers};
  const Family fi = config.family.value_or(kIFamilies[index % 3]);
  const Family fj = parameter_j ? Family::ParameterPowers : config.family.value_or(kJFamilies[(index / 3) % 4]);
  const auto base = splitmix(config.seed ^ splitmix(index));
  auto i = draw_one(ring, splitmix(base), fi, config.degree_bound);
  auto j = draw_one(ring, splitmix(base + 1), fj, config.degree_bound);
  if (index % 2 == 1) i = ideal_sum(i, j);
  return TrialPair{i, j};
}

TrialRecord run_check(CheckKind k, const IdealHandle& i, const IdealHandle& j, const SuiteConfig& config,
                      std::size_t trial) {
  TrialRecord rec;
  rec.check = k;
  rec.trial = trial;
  rec.ideal_i = i.to_string();
  rec.ideal_j = j.to_string();
  auto push = [&](VerifyReport r) { rec.reports.push_back(std::move(r)); };
  auto push_all = [&](std::vector<VerifyReport> rs) {
    for (auto& r : rs) push(std::move(r));
  };
  const auto p = i.ring().characteristic();
  try {
    switch (k) {
      case CheckKind::LenIdentity:
        push(verify_len_identity(i, j, 1));
        if (config.e_max >= 1) push(verify_len_identity(i, j, p));
        break;
      case CheckKind::PropIneq:
        push(verify_prop_ineq(i, j));
        break;
      case CheckKind::CorPower:
        for (std::uint64_t n = 1; n <= config.n; ++n) push(verify_cor_power(i, n));
        break;
      case CheckKind::EqConds:
        push(verify_thm_eqconds(i, j));
        break;
      case CheckKind::Freeness:
        push(verify_freeness(j, i));
        break;
      case CheckKind::Square:
        push(verify_cor_square(j));
        break;
      case CheckKind::Eq7:
        push_all(verify_eq7_per_q(i, j, config.e_max));
        break;
      case CheckKind::HKProduct:
        push(verify_hk_product_bound(i, j, resolve_mode(config, j), config.e_max));
        break;
      case CheckKind::CorPowerHK:
        push(verify_cor_power_hk(i, config.n, resolve_mode(config, i), config.e_max));
        break;
      case CheckKind::EqThenTC:
        push(verify_thm_eqthentc(i, j, resolve_mode(config, j), config.e_max));
        break;
      case CheckKind::ParamLower:
        push(verify_param_lower_bound(i, j, config.e_max));
        break;
      case CheckKind::SquareHK:
        push_all(verify_cor_square_hk(j, config.e_max));
        break;
      case CheckKind::Prop42:
        push_all(verify_prop42(i, j, config.e_max));
        break;
      case CheckKind::HunekeYao:
        push_all(verify_huneke_yao_per_q(i, std::max(config.e_max, 1u)));
        break;
    }
  } catch (const Inconclusive& e) {
    rec.reports.clear();
    rec.inconclusive = e.what();
  }
  return rec;
}

std::vector<TrialRecord> run_trials(CheckKind k, const RingPresentation& ring, const SuiteConfig& config) {
  std::vector<TrialRecord> out;
  out.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    auto pair = trial_pair(ring, config, t, check_needs_parameter_j(k));
    out.push_back(run_check(k, pair.i, pair.j, config, t));
  }
  return out;
}

bool all_hold(const std::vector<TrialRecord>& records) {
  for (const auto& rec : records)
    for (const auto& r : rec.reports)
      if (!r.holds) return false;
  return true;
}

std::string to_json_lines(const std::vector<TrialRecord>& records) {
  using json = nlohmann::ordered_json;
  std::ostringstream os;
  for (const auto& rec : records) {
    if (rec.inconclusive) {
      json j;
      j["schema"] = 1;
      j["check"] = check_name(rec.check);
      j["trial"] = rec.trial;
      j["I"] = rec.ideal_i;
      j["J"] = rec.ideal_j;
      j["inconclusive"] = true;
      j["reason"] = *rec.inconclusive;
      os << j.dump() << '\n';
      continue;
    }
    for (const auto& r : rec.reports) {
      json j;
      j["schema"] = 1;
      j["check"] = r.check;
      j["trial"] = rec.trial;
      j["fixture"] = r.fixture;
      j["lhs"] = to_string(r.lhs);
      j["relation"] = relation_symbol(r.relation);
      j["rhs"] = to_string(r.rhs);
      j["holds"] = r.holds;
      j["q"] = r.q ? json(*r.q) : json(nullptr);
      j["surrogate"] = r.surrogate;
      if (!r.caveat.empty()) j["caveat"] = r.caveat;
      json side = json::object();
      for (const auto& [key, value] : r.side) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, Rational>)
                side[key] = to_string(v);
              else
                side[key] = v;
            },
            value);
      }
      j["side"] = side;
      os << j.dump() << '\n';
    }
  }
  return os.str();
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream os;
  os << "checker,fixture,lhs,rhs,relation,holds,q\n";
  for (const auto& rec : records)
    for (const auto& r : rec.reports)
      os << csv_field(r.check) << ',' << csv_field(r.fixture) << ',' << to_string(r.lhs) << ',' << to_string(r.rhs)
         << ',' << csv_field(relation_symbol(r.relation)) << ',' << (r.holds ? "true" : "false") << ','
         << (r.q ? std::to_string(*r.q) : "") << '\n';
  return os.str();
}

}  // namespace hkprod
