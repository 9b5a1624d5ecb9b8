#include "doctest.h"
#include "gdh/gd.hpp"
#include "gdh/kp.hpp"
#include "gdh/render.hpp"

using namespace gdh;

TEST_SUITE("render") {

TEST_CASE("text form of single jets") {
  CHECK(render_text(jet(1, 0)) == "d1 v");
  CHECK(render_text(jet(1, 3)) == "d1^4 v");
  CHECK(render_text(jet(3, 0)) == "d3 v");
  CHECK(render_text(jet(3, 1)) == "d3 d1 v");
  CHECK(render_text(jet(2, 3)) == "d2 d1^3 v");
  CHECK(render_text(JetPolynomial()) == "0");
  CHECK(render_text(JetPolynomial(make_rational(-2, 3))) == "-2/3");
}

TEST_CASE("text form of products") {
  const JetPolynomial p = Rational(-1) * jet(2, 1) * jet(1, 1) * jet(1, 1);
  CHECK(render_text(p) == "-(d2 d1 v) (d1^2 v)^2");
}

TEST_CASE("left-hand sides") {
  CHECK(lhs_text({2, 2}) == "d2^2 v");
  CHECK(lhs_text({2, 3}) == "d3 d2 v");
  CHECK(lhs_text({1, 3, 3, 2}) == "d3^2 d2 d1 v");
  CHECK(lhs_latex({2, 3}) == "\\partial_{3}\\partial_{2} v");
}

TEST_CASE("equation display order") {
  KPTable kp;
  kp.ensure(6);
  CHECK(render_text(kp_equation(kp, 3, 3)) ==
        "9/5 d5 d1 v - d3 d1^3 v + 1/5 d1^6 v + 3 (d3 d1 v) (d1^2 v) + 9/4 (d2 d1 v)^2 - "
        "3 (d1^4 v) (d1^2 v) - 9/4 (d1^3 v)^2 + 3 (d1^2 v)^3");
  CHECK(render_latex(kp_equation(kp, 2, 2)) ==
        "\\frac{4}{3} \\partial_{3}\\partial v - \\frac{1}{3} \\partial^{4} v + 2 "
        "\\left(\\partial^{2} v\\right)^{2}");
}

TEST_CASE("json round trip") {
  GDContext ctx(4);
  const JetPolynomial e = gd_equation(ctx, {3, 3});
  const auto j = polynomial_json(e);
  CHECK(polynomial_from_json(j) == e);
  CHECK(j[0]["coeff"].contains("num"));
  CHECK(equation_terms_json(e).size() == e.size());
  CHECK(monomial_from_json(nlohmann::json::parse("[[1,1],[2,1]]")) ==
        JetMonomial{u(1, 1), u(2, 1)});
}

TEST_CASE("json rejects malformed polynomials") {
  using nlohmann::json;
  CHECK_THROWS(monomial_from_json(json::parse("[[2,1],[1,1]]")));
  CHECK_THROWS(monomial_from_json(json::parse("[[0,1]]")));
  CHECK_THROWS(monomial_from_json(json::parse("[[1,-1]]")));
  CHECK_THROWS(polynomial_from_json(json::parse(
      R"([{"monomial":[[1,1]],"coeff":{"num":"0","den":"1"}}])")));
  CHECK_THROWS(polynomial_from_json(json::parse(
      R"([{"monomial":[[1,1]],"coeff":{"num":"1","den":"1"}},
          {"monomial":[[1,1]],"coeff":{"num":"2","den":"1"}}])")));
}

TEST_CASE("series rendering") {
  GradedSeries s(3, 0);
  s.add({2, 2, 2, 2}, make_rational(2, 3));
  s.add({1, 1, 2}, Rational(1));
  CHECK(render_series_text(s) == "x1^2 x2 + 2/3 x2^4");
  CHECK(render_series_latex(s) == "x_{1}^{2} x_{2} + \\frac{2}{3} x_{2}^{4}");
  const auto j = series_json(s);
  CHECK(j["n"] == 3);
  CHECK(j["genus"] == 0);
  CHECK(j["terms"][0]["indices"] == nlohmann::json::parse("[1,1,2]"));
}

}
