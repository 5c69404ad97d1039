#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "../support/fixtures.hpp"
#include "hkprod/errors.hpp"
#include "hkprod/verify.hpp"

using namespace hkprod;
using fx::ideal;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Rational side_rational(const VerifyReport& r, const std::string& key) { return std::get<Rational>(r.side.at(key)); }
bool side_bool(const VerifyReport& r, const std::string& key) { return std::get<bool>(r.side.at(key)); }

void check_report(const VerifyReport& r, Rational lhs, Relation rel, Rational rhs) {
  CHECK(r.lhs == lhs);
  CHECK(r.rhs == rhs);
  CHECK(r.relation == rel);
  CHECK(r.holds);
  CHECK(r.holds == relation_holds(r.lhs, r.relation, r.rhs));
}

}  // namespace

TEST_CASE("relations") {
  CHECK(relation_holds(R(1), Relation::Less, R(2)));
  CHECK_FALSE(relation_holds(R(2), Relation::Less, R(2)));
  CHECK(relation_holds(R(2), Relation::LessEqual, R(2)));
  CHECK(relation_holds(R(3), Relation::GreaterEqual, R(5, 2)));
  CHECK_FALSE(relation_holds(R(1, 3), Relation::Equal, R(2, 6) + R(1, 100)));
  CHECK(relation_symbol(Relation::GreaterEqual) == ">=");
}

TEST_CASE("len-identity") {
  auto r = fx::plane(2);
  auto v = verify_len_identity(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}), 1);
  check_report(v, R(9), Relation::Equal, R(9));
  CHECK(side_rational(v, "lambda(K)") == R(3));
  CHECK(side_rational(v, "lambda(R/(IJ)^[q])") == R(6));
  v = verify_len_identity(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}), 1);
  check_report(v, R(3), Relation::Equal, R(3));
  CHECK(side_rational(v, "lambda(K)") == R(0));
  v = verify_len_identity(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}), 2);
  check_report(v, R(36), Relation::Equal, R(36));
  CHECK(side_rational(v, "lambda(K)") == R(12));
  CHECK(v.q == 2u);
  // Redundant generators of J are trimmed first.
  v = verify_len_identity(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y", "x+y"}), 1);
  CHECK(side_rational(v, "ell") == R(2));
  CHECK(v.holds);
}

TEST_CASE("prop-ineq") {
  auto r = fx::plane(2);
  auto v = verify_prop_ineq(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}));
  check_report(v, R(6), Relation::LessEqual, R(9));
  v = verify_prop_ineq(ideal(r, {"x^2", "y^2"}), ideal(r, {"x"}));
  check_report(v, R(4), Relation::LessEqual, R(4));
  CHECK(side_bool(v, "annihilator_in_I"));
  CHECK(side_bool(v, "equality"));
  v = verify_prop_ineq(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}));
  check_report(v, R(3), Relation::LessEqual, R(3));
  CHECK(side_bool(v, "equality"));
}

TEST_CASE("cor-power") {
  auto r = fx::plane(2);
  check_report(verify_cor_power(ideal(r, {"x", "y"}), 2), R(3), Relation::LessEqual, R(3));
  check_report(verify_cor_power(ideal(r, {"x^2", "x*y", "y^2"}), 2), R(10), Relation::LessEqual, R(12));
  auto i = ideal(r, {"x^2", "y^3"});
  check_report(verify_cor_power(i, 1), R(6), Relation::LessEqual, R(6));
  CHECK_THROWS_AS(verify_cor_power(i, 0), PreconditionFailed);
}

TEST_CASE("eqconds") {
  auto r = fx::plane(2);
  auto v = verify_thm_eqconds(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}));
  check_report(v, R(3), Relation::Equal, R(3));
  CHECK(side_bool(v, "J_in_I"));
  v = verify_thm_eqconds(ideal(r, {"x^2", "x*y", "y^2"}), ideal(r, {"x^2", "y^2"}));
  check_report(v, R(10), Relation::Equal, R(10));
  CHECK(side_bool(v, "regular_sequence"));
  v = verify_thm_eqconds(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}));
  check_report(v, R(6), Relation::Less, R(9));
  // Not a parameter ideal and contained: only the inequality is claimed.
  v = verify_thm_eqconds(ideal(r, {"x", "y"}), ideal(r, {"x^2", "x*y", "y^2"}));
  CHECK(v.relation == Relation::LessEqual);
  CHECK(v.holds);
  CHECK_THROWS_AS(verify_thm_eqconds(ideal(r, {"x", "y"}), ideal(r, {"x"})), InfiniteColength);
  auto line = fx::poly_ring(2, {"x"});
  CHECK_THROWS_AS(verify_thm_eqconds(ideal(line, {"x"}), ideal(line, {"x^2"})), PreconditionFailed);
}

TEST_CASE("freeness") {
  auto r = fx::plane(2);
  auto v = verify_freeness(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}));
  check_report(v, R(2), Relation::Equal, R(2));
  CHECK(side_bool(v, "free"));
  CHECK(side_rational(v, "lambda(K)") == R(0));
  v = verify_freeness(ideal(r, {"x", "y"}), ideal(r, {"x^2", "y^2"}));
  check_report(v, R(5), Relation::Less, R(8));
  CHECK_FALSE(side_bool(v, "free"));
  CHECK(side_rational(v, "lambda(K)") == R(3));
  v = verify_freeness(ideal(r, {"x"}), ideal(r, {"x^2", "y^2"}));
  check_report(v, R(4), Relation::Equal, R(4));
  CHECK(side_bool(v, "free"));
}

TEST_CASE("square") {
  check_report(verify_cor_square(ideal(fx::plane(3), {"x", "y^2"})), R(6), Relation::Equal, R(6));
  check_report(verify_cor_square(ideal(fx::space(2), {"x", "y", "z"})), R(4), Relation::Equal, R(4));
  check_report(verify_cor_square(ideal(fx::plane(5), {"x^2", "y^3"})), R(18), Relation::Equal, R(18));
  CHECK_THROWS_AS(verify_cor_square(ideal(fx::plane(2), {"x^2", "x*y", "y^2"})), PreconditionFailed);
}

TEST_CASE("eq7") {
  auto r = fx::plane(2);
  auto reports = verify_eq7_per_q(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}), 2);
  REQUIRE(reports.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(reports[k].q == (std::uint64_t{1} << k));
    CHECK(reports[k].holds);
  }
  CHECK(reports[2].lhs == R(144));
  auto fermat = fx::fermat(2);
  for (const auto& v : verify_eq7_per_q(maximal_ideal(fermat), ideal(fermat, {"y", "z"}), 2)) CHECK(v.holds);
  auto r3 = fx::plane(3);
  auto m3 = verify_eq7_per_q(maximal_ideal(r3), maximal_ideal(r3), 1);
  REQUIRE(m3.size() == 2);
  CHECK(m3[1].q == 3u);
  CHECK(m3[0].holds);
  CHECK(m3[1].holds);
}

TEST_CASE("hk-product") {
  auto r = fx::plane(2);
  auto v = verify_hk_product_bound(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}), StarSpreadMode::regular(), 1);
  check_report(v, R(6), Relation::LessEqual, R(9));
  CHECK_FALSE(v.surrogate);
  v = verify_hk_product_bound(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}), StarSpreadMode::regular(), 1);
  check_report(v, R(3), Relation::LessEqual, R(3));

  auto fermat = fx::fermat(2);
  auto m = maximal_ideal(fermat);
  auto j = ideal(fermat, {"y", "z"});
  v = verify_hk_product_bound(m, j, StarSpreadMode::parameter_equivalent(), 3);
  CHECK(v.surrogate);
  CHECK_FALSE(v.caveat.empty());
  CHECK(v.q == 8u);
  auto at8 = [&](const IdealHandle& i) { return R(static_cast<std::int64_t>(fx::len(bracket_power(i, 8))), 64); };
  check_report(v, at8(ideal_product(m, j)), Relation::LessEqual, R(2) * at8(m) + R(3));
  CHECK_THROWS_AS(verify_hk_product_bound(m, j, StarSpreadMode::regular(), 1), PreconditionFailed);
}

TEST_CASE("cor-power-hk") {
  auto r = fx::plane(2);
  check_report(verify_cor_power_hk(ideal(r, {"x", "y"}), 2, StarSpreadMode::regular(), 1), R(3),
               Relation::LessEqual, R(3));
  check_report(verify_cor_power_hk(ideal(r, {"x^2", "x*y", "y^2"}), 2, StarSpreadMode::regular(), 1), R(10),
               Relation::LessEqual, R(12));
  auto v = verify_cor_power_hk(ideal(r, {"x^2", "x*y", "y^2"}), 1, StarSpreadMode::regular(), 1);
  CHECK(v.lhs == v.rhs);
  CHECK(v.holds);
}

TEST_CASE("eqthentc") {
  auto r = fx::plane(2);
  auto v = verify_thm_eqthentc(ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "y^2"}), StarSpreadMode::regular(), 1);
  check_report(v, R(12), Relation::LessEqual, R(12));
  CHECK(side_bool(v, "J_in_I"));
  v = verify_thm_eqthentc(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}), StarSpreadMode::regular(), 1);
  check_report(v, R(6), Relation::Less, R(9));
  v = verify_thm_eqthentc(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}), StarSpreadMode::regular(), 1);
  check_report(v, R(3), Relation::LessEqual, R(3));
  CHECK(side_bool(v, "equality"));

  // Zero gap in the Fermat ring triggers probes, which are reported only.
  auto fermat = fx::fermat(2);
  auto j = ideal(fermat, {"y", "z"});
  v = verify_thm_eqthentc(j, j, StarSpreadMode::parameter_equivalent(), 2);
  CHECK(v.surrogate);
  CHECK(v.lhs == v.rhs);
  CHECK(v.side.count("probe z=y c=x^2"));
  CHECK(std::get<std::string>(v.side.at("probe z=y c=x^2")) == "ConsistentUpTo(4)");
}

TEST_CASE("param-lower") {
  auto r = fx::plane(2);
  auto v = verify_param_lower_bound(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}), 1);
  check_report(v, R(6), Relation::GreaterEqual, R(3));
  v = verify_param_lower_bound(ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "y^2"}), 1);
  check_report(v, R(12), Relation::Equal, R(12));
  CHECK(side_bool(v, "J_in_I"));

  auto fermat = fx::fermat(2);
  auto m = maximal_ideal(fermat);
  auto j = ideal(fermat, {"y", "z"});
  v = verify_param_lower_bound(m, j, 3);
  CHECK(v.surrogate);
  auto at8 = [&](const IdealHandle& i) { return R(static_cast<std::int64_t>(fx::len(bracket_power(i, 8))), 64); };
  CHECK(v.lhs == at8(ideal_product(m, j)));
  CHECK(v.rhs == R(2) * at8(m) + R(3));
  CHECK(v.holds);
  CHECK_THROWS_AS(verify_param_lower_bound(m, m, 1), PreconditionFailed);
}

TEST_CASE("square-hk") {
  auto fermat = fx::fermat(2);
  auto reports = verify_cor_square_hk(ideal(fermat, {"y", "z"}), 3);
  REQUIRE(reports.size() == 4);
  for (const auto& v : reports) {
    const auto q = static_cast<std::int64_t>(*v.q);
    check_report(v, R(9 * q * q), Relation::Equal, R(3) * R(3 * q * q));
  }
  auto sq = verify_cor_square_hk(ideal(fx::plane(3), {"x", "y^2"}), 1);
  REQUIRE(sq.size() == 1);
  check_report(sq[0], R(6), Relation::Equal, R(6));
  auto cube = verify_cor_square_hk(ideal(fx::space(2), {"x", "y", "z"}), 1);
  check_report(cube[0], R(4), Relation::Equal, R(4));
}

TEST_CASE("prop42") {
  auto r3 = fx::plane(3);
  auto v = verify_prop42(ideal(r3, {"x^2", "y^2"}), ideal(r3, {"x", "y"}), 1);
  REQUIRE(v.size() == 1);
  CHECK(v[0].q == 3u);
  check_report(v[0], R(17), Relation::Equal, R(17));

  auto r2 = fx::plane(2);
  v = verify_prop42(ideal(r2, {"x^2", "y^2"}), ideal(r2, {"x", "y"}), 1);
  REQUIRE(v.size() == 1);
  check_report(v[0], R(12), Relation::Equal, R(12));
  v = verify_prop42(ideal(r2, {"x^4", "y^4"}), ideal(r2, {"x", "y"}), 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].q == 4u);
  check_report(v[0], R(48), Relation::Equal, R(48));
  CHECK(side_rational(v[0], "q0") == R(4));
  CHECK_THROWS_AS(verify_prop42(ideal(r2, {"x^4", "y^4"}), ideal(r2, {"x", "y"}), 1), Inconclusive);
}

TEST_CASE("huneke-yao") {
  auto fermat = fx::fermat(2);
  auto v = verify_huneke_yao_per_q(ideal(fermat, {"x^2", "y", "z"}), 1);
  REQUIRE(v.size() == 1);
  check_report(v[0], R(12), Relation::LessEqual, R(16));
  auto r = fx::plane(2);
  v = verify_huneke_yao_per_q(ideal(r, {"x^2", "y^2"}), 1);
  REQUIRE(v.size() == 2);
  check_report(v[0], R(16), Relation::LessEqual, R(16));
  CHECK(side_bool(v[1], "limit_form"));
  CHECK(v[1].holds);
  for (const auto& h : verify_huneke_yao_per_q(maximal_ideal(fermat), 3)) {
    CHECK(h.holds);
    CHECK(h.lhs == h.rhs);
  }
}

TEST_CASE("check registry") {
  CHECK(all_checks().size() == 14);
  for (auto k : all_checks()) CHECK(parse_check(check_name(k)) == k);
  CHECK_FALSE(parse_check("thm-4.1"));
  CHECK(check_needs_parameter_j(CheckKind::Prop42));
  CHECK_FALSE(check_needs_parameter_j(CheckKind::LenIdentity));
}

TEST_CASE("trial driver") {
  auto r = fx::plane(2);
  SuiteConfig config;
  config.seed = 5;
  config.trials = 12;
  for (auto k : all_checks()) {
    auto records = run_trials(k, r, config);
    CHECK(records.size() == 12);
    CHECK(all_hold(records));
    CHECK(to_json_lines(records) == to_json_lines(run_trials(k, r, config)));
  }
  // Odd trials contain J.
  auto pair = trial_pair(r, config, 3, false);
  CHECK(contains(pair.i, pair.j));
  auto param = trial_pair(r, config, 4, true);
  CHECK(is_parameter_ideal(param.j));

  auto records = run_trials(CheckKind::LenIdentity, r, config);
  std::istringstream lines(to_json_lines(records));
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["schema"] == 1);
    CHECK(j["check"] == "len-identity");
    CHECK(j["holds"] == true);
    CHECK(j.contains("side"));
    ++count;
  }
  CHECK(count == 24);  // q = 1 and q = 2 per trial
  auto csv = to_csv(records);
  CHECK(csv.rfind("checker,fixture,lhs,rhs,relation,holds,q\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);
}
