#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/fixtures.hpp"
#include "hkprod/errors.hpp"
#include "hkprod/field.hpp"
#include "hkprod/monomial.hpp"

using namespace hkprod;
using fx::poly;

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  for (Coefficient a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);

  PrimeField big(2147483647u);
  CHECK(big.mul(2147483646u, 2147483646u) == 1);
  CHECK(big.mul(big.inv(123456789u), 123456789u) == 1);

  CHECK_THROWS_AS(PrimeField(0), PreconditionFailed);
  CHECK_THROWS_AS(PrimeField(15), PreconditionFailed);
  CHECK_THROWS_AS(PrimeField(1), PreconditionFailed);
}

TEST_CASE("field elements") {
  FieldElement a(10, 7), b(-1, 7);
  CHECK(a.value() == 3);
  CHECK(b.value() == 6);
  CHECK((a + b).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((-a).value() == 4);
  CHECK_THROWS_AS(a + FieldElement(1, 5), RingMismatch);
}

TEST_CASE("parse_polynomial") {
  auto r2 = fx::plane(2);
  CHECK(poly(r2, "x^2*y + 3*y").to_string() == "x^2*y + y");
  CHECK(poly(r2, "x - x").is_zero());
  CHECK(poly(r2, "(x+y)^2") == poly(r2, "x^2 + y^2"));
  auto r5 = fx::plane(5);
  CHECK(poly(r5, "-x").to_string() == "4*x");
  CHECK(poly(r5, "x*-x^2") == poly(r5, "-x^3"));
  CHECK(poly(r5, "2*(x + 3)") == poly(r5, "2*x + 1"));
  CHECK(poly(r5, "x−y") == poly(r5, "x - y"));
  CHECK(poly(r5, "123456789012345678901234567890") == Polynomial::constant(r5.base(), 0));

  CHECK_THROWS_AS(poly(r5, "x + w"), ParseError);
  CHECK_THROWS_AS(poly(r5, "x +"), ParseError);
  CHECK_THROWS_AS(poly(r5, "(x + y"), ParseError);
  CHECK_THROWS_AS(poly(r5, "x^"), ParseError);
  CHECK_THROWS_AS(poly(r5, "x y"), ParseError);
  CHECK_THROWS_AS(RingPresentation::polynomial_ring(0, {"x"}), PreconditionFailed);
}

TEST_CASE("polynomial products") {
  auto r2 = fx::plane(2);
  CHECK(poly_mul(poly(r2, "x+y"), poly(r2, "x+y")) == poly(r2, "x^2+y^2"));
  CHECK(poly_mul(poly(r2, "x+y"), poly(r2, "0")).is_zero());
  auto r5 = fx::plane(5);
  CHECK(poly_mul(poly(r5, "x+y"), poly(r5, "x-y")) == poly(r5, "x^2+4*y^2"));
  auto other = fx::plane(5);
  auto three = fx::poly_ring(5, {"x", "y", "z"});
  CHECK_NOTHROW(poly(r5, "x") * poly(other, "y"));
  CHECK_THROWS_AS(poly(r5, "x") * poly(three, "y"), RingMismatch);
}

TEST_CASE("frobenius powers") {
  auto r5 = fx::plane(5);
  CHECK(frobenius_power(poly(r5, "x^2-y"), 5) == poly(r5, "x^10 - y^5"));
  CHECK(frobenius_power(poly(r5, "x^2-y"), 1) == poly(r5, "x^2-y"));
  auto s2 = fx::space(2);
  CHECK(frobenius_power(poly(s2, "x+y+z"), 4) == poly(s2, "x^4+y^4+z^4"));
  CHECK_THROWS_AS(frobenius_power(poly(r5, "x"), 4), PreconditionFailed);
  CHECK_THROWS_AS(frobenius_power(poly(r5, "x"), 0), PreconditionFailed);

  Monomial big{1u << 31, 0};
  CHECK_THROWS_AS(big.scaled(2), std::overflow_error);
  CHECK_THROWS_AS(Polynomial::monomial(r5.base(), big).frobenius_power(5), std::overflow_error);
}

TEST_CASE("monomial orders") {
  const MonomialOrder grevlex(OrderKind::GRevLex, 2), lex(OrderKind::Lex, 2);
  CHECK(order_compare(Monomial{2, 1}, Monomial{1, 2}, grevlex) == std::strong_ordering::greater);
  CHECK(order_compare(Monomial{3, 4}, Monomial{3, 4}, grevlex) == std::strong_ordering::equal);
  CHECK(order_compare(Monomial{0, 5}, Monomial{1, 0}, lex) == std::strong_ordering::less);
  CHECK(order_compare(Monomial{0, 5}, Monomial{1, 0}, grevlex) == std::strong_ordering::greater);
  // Degree 3 in three variables: grevlex x^2 z < x y^2 since z is smallest.
  const MonomialOrder g3(OrderKind::GRevLex, 3);
  CHECK(order_compare(Monomial{2, 0, 1}, Monomial{1, 2, 0}, g3) == std::strong_ordering::less);
  // Swapping precedence reverses the roles of x and y.
  const MonomialOrder yx(OrderKind::Lex, std::vector<std::size_t>{1, 0});
  CHECK(order_compare(Monomial{0, 5}, Monomial{1, 0}, yx) == std::strong_ordering::greater);
  CHECK_THROWS_AS(order_compare(Monomial{1}, Monomial{1, 0}, lex), PreconditionFailed);
  CHECK_THROWS_AS(MonomialOrder(OrderKind::Lex, std::vector<std::size_t>{0, 0}), PreconditionFailed);
}

namespace {

Polynomial random_poly(const RingPresentation& r, std::mt19937_64& rng) {
  std::vector<Term> terms;
  auto n = rng() % 5;
  for (std::uint64_t k = 0; k < n; ++k) {
    Monomial m(r.nvars());
    for (std::size_t v = 0; v < r.nvars(); ++v) m[v] = static_cast<Monomial::Exponent>(rng() % 4);
    terms.push_back(Term{static_cast<Coefficient>(rng() % r.characteristic()), m});
  }
  return Polynomial(r.base(), terms);
}

}  // namespace

TEST_CASE("ring axioms and Frobenius additivity on random polynomials") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = fx::space(p);
    for (int trial = 0; trial < 40; ++trial) {
      auto f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK(f - f == Polynomial(r.base()));
      for (std::uint64_t q : {std::uint64_t{p}, std::uint64_t{p} * p}) {
        CHECK(frobenius_power(f, q) == f.pow(q));
        CHECK(frobenius_power(f + g, q) == frobenius_power(f, q) + frobenius_power(g, q));
      }
      auto terms = f.terms();
      std::shuffle(terms.begin(), terms.end(), rng);
      CHECK(Polynomial(r.base(), terms) == f);
    }
  }
}

TEST_CASE("ring presentations") {
  auto fermat = fx::fermat(2);
  CHECK(fermat.describe() == "F_2[x,y,z]/(x^3 + y^3 + z^3)");
  CHECK(fermat.is_graded());
  CHECK_FALSE(fermat.is_regular());
  CHECK(fx::plane(3).is_regular());
  auto s = fx::plane(3);
  RingPresentation inhom(s.base(), {poly(s, "x^2 - y")});
  CHECK_FALSE(inhom.is_graded());
  CHECK_THROWS_AS(RingPresentation::polynomial_ring(2, {"x", "x"}), PreconditionFailed);
  CHECK_THROWS_AS(RingPresentation::polynomial_ring(2, {"x", "1y"}), PreconditionFailed);
  CHECK_THROWS_AS(RingPresentation::polynomial_ring(2, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}),
                  PreconditionFailed);
}
