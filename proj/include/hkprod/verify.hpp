#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hkprod/hilbert_kunz.hpp"
#include "hkprod/ideal.hpp"
#include "hkprod/rational.hpp"

namespace hkprod {

/// Strict '<' is used where a result forbids equality (e.g. equality would
/// force a containment that fails).
enum class Relation { Equal, LessEqual, GreaterEqual, Less };

std::string_view relation_symbol(Relation r);
bool relation_holds(const Rational& lhs, Relation r, const Rational& rhs);

using SideValue = std::variant<Rational, bool, std::string>;

struct VerifyReport {
  std::string check;
  std::string fixture;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::Equal;
  bool holds = false;  // always relation_holds(lhs, relation, rhs)
  std::map<std::string, SideValue> side;
  std::optional<std::uint64_t> q;
  /// Finite-q stand-in for a statement about limits.
  bool surrogate = false;
  std::string caveat;
};

VerifyReport verify_len_identity(const IdealHandle& i, const IdealHandle& j, std::uint64_t q);
VerifyReport verify_prop_ineq(const IdealHandle& i, const IdealHandle& j);
VerifyReport verify_cor_power(const IdealHandle& i, std::uint64_t n);
VerifyReport verify_thm_eqconds(const IdealHandle& i, const IdealHandle& j);
VerifyReport verify_freeness(const IdealHandle& j, const IdealHandle& i);
VerifyReport verify_cor_square(const IdealHandle& j);
std::vector<VerifyReport> verify_eq7_per_q(const IdealHandle& i, const IdealHandle& j, unsigned e_max);
VerifyReport verify_hk_product_bound(const IdealHandle& i, const IdealHandle& j, const StarSpreadMode& mode,
                                     unsigned e_max);
VerifyReport verify_cor_power_hk(const IdealHandle& i, std::uint64_t n, const StarSpreadMode& mode, unsigned e_max);
VerifyReport verify_thm_eqthentc(const IdealHandle& i, const IdealHandle& j, const StarSpreadMode& mode,
                                 unsigned e_max);
VerifyReport verify_param_lower_bound(const IdealHandle& i, const IdealHandle& j, unsigned e_max);
std::vector<VerifyReport> verify_cor_square_hk(const IdealHandle& j, unsigned e_max);
/// Throws Inconclusive when no J^[q0] within range lies in I.
std::vector<VerifyReport> verify_prop42(const IdealHandle& i, const IdealHandle& j, unsigned e_max);
std::vector<VerifyReport> verify_huneke_yao_per_q(const IdealHandle& i, unsigned e_max);

enum class CheckKind {
  LenIdentity,
  PropIneq,
  CorPower,
  EqConds,
  Freeness,
  Square,
  Eq7,
  HKProduct,
  CorPowerHK,
  EqThenTC,
  ParamLower,
  SquareHK,
  Prop42,
  HunekeYao,
};

std::string_view check_name(CheckKind k);
std::optional<CheckKind> parse_check(std::string_view name);
const std::vector<CheckKind>& all_checks();

/// Which ideals a check consumes from a trial.
bool check_needs_parameter_j(CheckKind k);

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  unsigned e_max = 1;
  unsigned degree_bound = 2;
  std::uint64_t n = 2;
  /// Forces the family of I (and of J unless the check needs a parameter J).
  std::optional<Family> family;
  /// Unset: Regular in polynomial rings, otherwise ParameterEquivalent for
  /// parameter J and UserSupplied(mu(J)) for the rest.
  std::optional<StarSpreadMode> mode;
};

struct TrialRecord {
  CheckKind check = CheckKind::LenIdentity;
  std::size_t trial = 0;
  std::string ideal_i;
  std::string ideal_j;
  std::vector<VerifyReport> reports;
  /// Set when the check could not be decided for this trial.
  std::optional<std::string> inconclusive;
};

struct TrialPair {
  IdealHandle i;
  IdealHandle j;
};

/// Deterministic (I, J) for trial `index`. Odd trials replace I by I + J so
/// that containment J in I is exercised.
TrialPair trial_pair(const RingPresentation& ring, const SuiteConfig& config, std::size_t index, bool parameter_j);

/// Runs one check on a fixed pair (J may be ignored by single-ideal checks).
TrialRecord run_check(CheckKind k, const IdealHandle& i, const IdealHandle& j, const SuiteConfig& config,
                      std::size_t trial = 0);
std::vector<TrialRecord> run_trials(CheckKind k, const RingPresentation& ring, const SuiteConfig& config);

bool all_hold(const std::vector<TrialRecord>& records);

/// One JSON object per report (or per inconclusive trial), each with "schema": 1.
std::string to_json_lines(const std::vector<TrialRecord>& records);
/// Header checker,fixture,lhs,rhs,relation,holds,q then one row per report.
std::string to_csv(const std::vector<TrialRecord>& records);

}  // namespace hkprod
