#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkprod/ideal.hpp"
#include "hkprod/rational.hpp"

namespace hkprod {

struct HKRow {
  std::uint64_t q = 1;
  std::uint64_t colength = 0;
  Rational normalized;  // colength / q^d
};

struct HKTable {
  IdealHandle ideal;
  std::size_t d = 0;
  std::vector<HKRow> rows;  // q = p^0, p^1, ..., increasing
};

/// Rows lambda(R/I^[q]) for q = p^0 .. p^e_max.
HKTable hk_table(const IdealHandle& ideal, unsigned e_max);

enum class HKMethod { ExactRegular, ExactMonomialVolume, SequenceLast, SequenceExtrapolated };
enum class EstimateMode { Auto, Regular, MonomialVolume, SequenceLast, SequenceExtrapolated };

std::string_view method_name(HKMethod m);
std::optional<EstimateMode> parse_estimate_mode(std::string_view name);

struct HKEstimate {
  Rational value;
  HKMethod method = HKMethod::SequenceLast;
  /// True only for the exact methods. Sequence values are finite-q data, not limits.
  bool resolved = false;
  HKTable table;
};

/// Auto picks exact-regular in polynomial rings and sequence-last otherwise;
/// exact-monomial-volume only on request (it agrees with exact-regular).
/// Extrapolation fits e + c/q through the last two rows and is a heuristic.
HKEstimate hk_estimate(const IdealHandle& ideal, unsigned e_max, EstimateMode mode = EstimateMode::Auto);

bool is_monomial_ideal(const IdealHandle& ideal);

/// Volume of the region under the staircase of a monomial m-primary ideal in a
/// polynomial ring, by inclusion-exclusion over joins of generator exponents.
Rational monomial_hk_volume(const IdealHandle& ideal);

struct HilbertSamuel {
  std::uint64_t multiplicity = 0;
  /// (n, d! * lambda(R/J^n) / n^d) for n = 1 .. n_max.
  std::vector<std::pair<std::uint64_t, Rational>> diagnostics;
};

/// e(J) = lambda(R/J) for a parameter ideal of a Cohen-Macaulay ring.
HilbertSamuel hilbert_samuel_parameter(const IdealHandle& j, unsigned n_max = 4);

struct StarSpreadMode {
  enum class Kind { Regular, ParameterEquivalent, UserSupplied };
  Kind kind = Kind::Regular;
  std::size_t value = 0;        // UserSupplied
  bool caller_asserted = false;  // ParameterEquivalent without a parameter ideal

  static StarSpreadMode regular() { return {Kind::Regular, 0, false}; }
  static StarSpreadMode parameter_equivalent(bool asserted = false) { return {Kind::ParameterEquivalent, 0, asserted}; }
  static StarSpreadMode user_supplied(std::size_t k) { return {Kind::UserSupplied, k, false}; }
};

std::string to_string(const StarSpreadMode& mode);

/// l*(J) under the chosen mode.
std::size_t star_spread(const IdealHandle& j, const StarSpreadMode& mode);

class ProbeVerdict {
 public:
  static ProbeVerdict consistent_up_to(std::uint64_t q) { return ProbeVerdict(false, q, std::nullopt); }
  static ProbeVerdict refuted_at(std::uint64_t q, Polynomial witness) { return ProbeVerdict(true, q, std::move(witness)); }

  bool refuted() const { return refuted_; }
  std::uint64_t q() const { return q_; }
  /// Normal form of c*z^q modulo I^[q] at the failing q.
  const std::optional<Polynomial>& witness() const { return witness_; }
  /// "ConsistentUpTo(8)" or "RefutedAt(2)".
  std::string to_string() const;

 private:
  ProbeVerdict(bool refuted, std::uint64_t q, std::optional<Polynomial> witness)
      : refuted_(refuted), q_(q), witness_(std::move(witness)) {}
  bool refuted_;
  std::uint64_t q_;
  std::optional<Polynomial> witness_;
};

/// Checks c*z^q in I^[q] for q = p .. p^e_max. A refutation rules out z in I*
/// only if c is a test element.
ProbeVerdict tc_probe(const Polynomial& z, const IdealHandle& ideal, const Polynomial& c, unsigned e_max);

struct JacobianCandidates {
  std::vector<Polynomial> elements;
  bool degenerate = false;  // every partial derivative vanishes
};

JacobianCandidates jacobian_candidates(const RingPresentation& ring);

/// p^e, throwing std::overflow_error past 2^63.
std::uint64_t frobenius_level(std::uint32_t p, unsigned e);

}  // namespace hkprod
