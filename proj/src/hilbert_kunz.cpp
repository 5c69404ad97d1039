#include "hkprod/hilbert_kunz.hpp"

#include <algorithm>

#include "hkprod/errors.hpp"

namespace hkprod {

std::uint64_t frobenius_level(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k)
    if (__builtin_mul_overflow(q, std::uint64_t{p}, &q) || q > (std::uint64_t{1} << 63))
      throw std::overflow_error("Frobenius level p^" + std::to_string(e) + " overflows");
  return q;
}

namespace {

std::uint64_t power_checked(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k)
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("q^d overflows");
  return r;
}

}  // namespace

HKTable hk_table(const IdealHandle& ideal, unsigned e_max) {
  require_m_primary(ideal, "hk_table");
  const auto& ring = ideal.ring();
  HKTable table{ideal, krull_dim(ring), {}};
  for (unsigned e = 0; e <= e_max; ++e) {
    auto q = frobenius_level(ring.characteristic(), e);
    auto len = colength(bracket_power(ideal, q)).value();
    table.rows.push_back(HKRow{q, len, make_rational(len, power_checked(q, table.d))});
  }
  return table;
}

std::string_view method_name(HKMethod m) {
  switch (m) {
    case HKMethod::ExactRegular:
      return "exact-regular";
    case HKMethod::ExactMonomialVolume:
      return "exact-monomial-volume";
    case HKMethod::SequenceLast:
      return "sequence-last";
    case HKMethod::SequenceExtrapolated:
      return "sequence-extrapolated";
  }
  return "?";
}

std::optional<EstimateMode> parse_estimate_mode(std::string_view name) {
  if (name == "auto") return EstimateMode::Auto;
  if (name == "exact-regular" || name == "regular") return EstimateMode::Regular;
  if (name == "exact-monomial-volume" || name == "monomial") return EstimateMode::MonomialVolume;
  if (name == "sequence-last" || name == "last") return EstimateMode::SequenceLast;
  if (name == "sequence-extrapolated" || name == "extrapolated") return EstimateMode::SequenceExtrapolated;
  return std::nullopt;
}

bool is_monomial_ideal(const IdealHandle& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

HKEstimate hk_estimate(const IdealHandle& ideal, unsigned e_max, EstimateMode mode) {
  auto table = hk_table(ideal, e_max);
  const bool regular = ideal.ring().is_regular();
  if (mode == EstimateMode::Auto) {
    if (regular)
      mode = EstimateMode::Regular;
    else
      mode = EstimateMode::SequenceLast;
  }
  switch (mode) {
    case EstimateMode::Regular:
      if (!regular) throw PreconditionFailed("exact-regular estimate needs a polynomial ring");
      return HKEstimate{make_rational(table.rows.front().colength), HKMethod::ExactRegular, true, std::move(table)};
    case EstimateMode::MonomialVolume: {
      auto v = monomial_hk_volume(ideal);
      return HKEstimate{v, HKMethod::ExactMonomialVolume, true, std::move(table)};
    }
    case EstimateMode::SequenceExtrapolated:
      if (table.rows.size() >= 2) {
        const auto& r1 = table.rows[table.rows.size() - 2];
        const auto& r2 = table.rows.back();
        auto q1 = make_rational(r1.q), q2 = make_rational(r2.q);
        auto e = (q2 * r2.normalized - q1 * r1.normalized) / (q2 - q1);
        return HKEstimate{e, HKMethod::SequenceExtrapolated, false, std::move(table)};
      }
      [[fallthrough]];
    default: {
      auto last = table.rows.back().normalized;
      return HKEstimate{last, HKMethod::SequenceLast, false, std::move(table)};
    }
  }
}

namespace {

void volume_terms(const std::vector<std::vector<std::uint64_t>>& gens, const std::vector<std::uint64_t>& box,
                  std::size_t start, std::vector<std::uint64_t>& join, int sign, __int128& total) {
  for (std::size_t i = start; i < gens.size(); ++i) {
    auto saved = join;
    bool zero = false;
    __int128 term = 1;
    for (std::size_t k = 0; k < box.size(); ++k) {
      join[k] = std::max(join[k], gens[i][k]);
      if (join[k] >= box[k]) zero = true;
      term *= static_cast<__int128>(box[k] - std::min(join[k], box[k]));
    }
    // Joins only grow, so a vanishing term prunes the whole subtree.
    if (!zero) {
      total += sign * term;
      volume_terms(gens, box, i + 1, join, -sign, total);
    }
    join = std::move(saved);
  }
}

}  // namespace

Rational monomial_hk_volume(const IdealHandle& ideal) {
  const auto& ring = ideal.ring();
  if (!ring.is_regular()) throw PreconditionFailed("monomial_hk_volume needs a polynomial ring");
  if (!is_monomial_ideal(ideal)) throw PreconditionFailed("monomial_hk_volume needs monomial generators");
  require_m_primary(ideal, "monomial_hk_volume");
  const auto n = ring.nvars();

  std::vector<Monomial> monos;
  for (const auto& g : ideal.generators()) monos.push_back(g.leading_term().mono);
  std::vector<std::vector<std::uint64_t>> gens;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < monos.size() && !redundant; ++k)
      if (k != i && monos[k].divides(monos[i]) && (!(monos[k] == monos[i]) || k < i)) redundant = true;
    if (redundant) continue;
    std::vector<std::uint64_t> e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = monos[i][v];
    gens.push_back(std::move(e));
  }
  std::vector<std::uint64_t> box(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v) box[v] = std::max(box[v], g[v]);

  __int128 total = 1;
  for (auto b : box) total *= b;
  __int128 covered = 0;
  std::vector<std::uint64_t> join(n, 0);
  volume_terms(gens, box, 0, join, 1, covered);
  total -= covered;
  if (total < 0 || total > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("volume overflow");
  return Rational(static_cast<std::int64_t>(total));
}

HilbertSamuel hilbert_samuel_parameter(const IdealHandle& j, unsigned n_max) {
  if (!is_parameter_ideal(j)) throw PreconditionFailed(j.to_string() + " is not a parameter ideal");
  const auto d = krull_dim(j.ring());
  HilbertSamuel hs;
  hs.multiplicity = colength(j).value();
  std::uint64_t factorial = 1;
  for (std::size_t k = 2; k <= d; ++k) factorial *= k;
  for (unsigned n = 1; n <= n_max; ++n) {
    auto len = colength(ideal_power(j, n)).value();
    hs.diagnostics.emplace_back(n, make_rational(factorial * len, power_checked(n, d)));
  }
  return hs;
}

std::string to_string(const StarSpreadMode& mode) {
  switch (mode.kind) {
    case StarSpreadMode::Kind::Regular:
      return "regular";
    case StarSpreadMode::Kind::ParameterEquivalent:
      return "parameter";
    case StarSpreadMode::Kind::UserSupplied:
      return "user:" + std::to_string(mode.value);
  }
  return "?";
}

std::size_t star_spread(const IdealHandle& j, const StarSpreadMode& mode) {
  switch (mode.kind) {
    case StarSpreadMode::Kind::Regular:
      if (!j.ring().is_regular()) throw PreconditionFailed("Regular *-spread mode on a ring with relations");
      return min_gens(j);
    case StarSpreadMode::Kind::ParameterEquivalent:
      if (!mode.caller_asserted && !is_parameter_ideal(j))
        throw PreconditionFailed(j.to_string() + " is not a parameter ideal");
      return krull_dim(j.ring());
    case StarSpreadMode::Kind::UserSupplied:
      return mode.value;
  }
  return 0;
}

std::string ProbeVerdict::to_string() const {
  return (refuted_ ? "RefutedAt(" : "ConsistentUpTo(") + std::to_string(q_) + ")";
}

ProbeVerdict tc_probe(const Polynomial& z, const IdealHandle& ideal, const Polynomial& c, unsigned e_max) {
  if (c.is_zero()) throw PreconditionFailed("probe multiplier must be nonzero");
  if (e_max == 0) throw PreconditionFailed("probe needs e_max >= 1");
  const auto p = ideal.ring().characteristic();
  std::uint64_t q = 1;
  for (unsigned e = 1; e <= e_max; ++e) {
    q = frobenius_level(p, e);
    auto iq = bracket_power(ideal, q);
    auto nf = normal_form(c * z.frobenius_power(q), iq.groebner());
    if (!nf.is_zero()) return ProbeVerdict::refuted_at(q, std::move(nf));
  }
  return ProbeVerdict::consistent_up_to(q);
}

JacobianCandidates jacobian_candidates(const RingPresentation& ring) {
  if (ring.relations().size() != 1) throw PreconditionFailed("jacobian candidates need exactly one relation");
  JacobianCandidates out;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    auto d = ring.relations().front().partial_derivative(v);
    if (!d.is_zero()) out.elements.push_back(std::move(d));
  }
  out.degenerate = out.elements.empty();
  return out;
}

}  // namespace hkprod
