#include "doctest.h"
#include "gdh/checks.hpp"
#include "gdh/errors.hpp"
#include "gdh/gd.hpp"
#include "gdh/oracles.hpp"

using namespace gdh;

TEST_SUITE("gd") {

TEST_CASE("Boussinesq") {
  GDContext ctx(3);
  const JetPolynomial e = gd_equation(ctx, {2, 2});
  CHECK(e == -make_rational(1, 3) * jet(1, 3) + Rational(2) * jet(1, 1) * jet(1, 1));
}

TEST_CASE("n = 4 low equations") {
  GDContext ctx(4);
  CHECK(gd_equation(ctx, {2, 2}) ==
        make_rational(4, 3) * jet(3, 1) - make_rational(1, 3) * jet(1, 3) +
            Rational(2) * jet(1, 1) * jet(1, 1));
  CHECK(gd_equation(ctx, {2, 3}) ==
        -make_rational(1, 2) * jet(2, 3) + Rational(3) * jet(2, 1) * jet(1, 1));
  const JetPolynomial e33 = gd_equation(ctx, {3, 3});
  CHECK(e33.coefficient(JetMonomial{u(3, 3)}) == -make_rational(1, 4));
  CHECK(e33.coefficient(JetMonomial{u(1, 5)}) == make_rational(1, 8));
  CHECK(e33.coefficient(JetMonomial{u(2, 1), u(2, 1)}) == make_rational(9, 8));
  CHECK(e33.coefficient(JetMonomial{u(1, 1), u(1, 3)}) == -make_rational(9, 4));
  CHECK(e33.coefficient(JetMonomial{u(1, 2), u(1, 2)}) == -make_rational(9, 8));
  CHECK(e33.coefficient(JetMonomial{u(1, 1), u(1, 1), u(1, 1)}) == 3);
  CHECK(e33.size() == 6);
}

TEST_CASE("KdV") {
  GDContext kdv(2);
  CHECK(gd_equation(kdv, {3, 3}) ==
        make_rational(1, 16) * jet(1, 5) - make_rational(3, 2) * jet(1, 3) * jet(1, 1) -
            make_rational(3, 8) * jet(1, 2) * jet(1, 2) +
            Rational(3) * jet(1, 1) * jet(1, 1) * jet(1, 1));
  const auto r = check_kdv_soliton(kdv, 10);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("printed equations") {
  const auto r = check_gd_printed();
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("3/4") != std::string::npos);
}

TEST_CASE("elimination rule for n = 3") {
  GDContext ctx(3);
  const JetPolynomial e = elimination_rule(ctx, 1);
  for (const auto& [m, c] : e.terms())
    for (const auto& v : m.factors()) CHECK(v.s <= 2);
  CHECK(e.coefficient(JetMonomial{u(2, 3)}) == make_rational(1, 3));
}

TEST_CASE("normalization examples") {
  GDContext kdv(2);
  CHECK(gd_normalize(kdv, jet(3, 1)) ==
        make_rational(1, 4) * jet(1, 3) - make_rational(3, 2) * jet(1, 1) * jet(1, 1));
  GDContext c(4);
  CHECK(gd_normalize(c, jet(4, 7)).is_zero());
  GDContext d(5);
  CHECK(gd_normalize(d, jet(1, 5)) == jet(1, 5));
}

TEST_CASE("selection rules") {
  const auto r = check_gd_structure({2, 3, 4}, 4);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("normal form via the full coefficient agrees") {
  GDContext ctx(3);
  const JetPolynomial e = gd_equation(ctx, {2, 4});
  for (const auto& [m, c] : e.terms()) CHECK(n_coeff(ctx, {2, 4}, m) == c);
  CHECK(n_coeff(ctx, {2, 4}, JetMonomial{u(2, 7)}) == 0);
}

TEST_CASE("routes agree on the reduction") {
  const auto r = check_route_agreement(3, 10);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("domain errors") {
  GDContext ctx(3);
  CHECK_THROWS_AS(GDContext(1), DomainError);
  CHECK_THROWS_AS(gd_equation(ctx, {2}), DomainError);
  CHECK_THROWS_AS(gd_equation(ctx, {0, 2}), DomainError);
  CHECK_THROWS_AS(gd_normalize(ctx, jet(3, 0)), DomainError);
  CHECK(gd_normalize(ctx, jet(3, 1)).is_zero());
}

}
