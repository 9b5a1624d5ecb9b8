#include "doctest.h"
#include "gdh/checks.hpp"
#include "gdh/errors.hpp"
#include "gdh/oracles.hpp"
#include "gdh/witten.hpp"

using namespace gdh;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

GradedSeries series(int n, std::initializer_list<std::pair<GradedSeries::Key, Rational>> terms) {
  GradedSeries s(n);
  for (const auto& [k, c] : terms) s.add(k, c);
  return s;
}

}  // namespace

TEST_SUITE("witten") {

TEST_CASE("admissibility") {
  const auto a = admissibility(2, {1, 1, 1});
  REQUIRE(a);
  CHECK(a->m == 1);
  CHECK(a->genus == 0);
  const auto b = admissibility(2, {1, 5});
  REQUIRE(b);
  CHECK(b->genus == 1);
  CHECK_FALSE(admissibility(2, {1, 1}));
  CHECK_FALSE(admissibility(3, {1, 1, 1}));
  CHECK(integer_degree(3, {1, 1, 2}) == 8);
}

TEST_CASE("KdV truncation, frozen coefficients") {
  GDContext kdv(2);
  const auto w = witten_truncation(kdv, 1, 4);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == series(2, {{{1, 1, 1}, q(1, 6)}, {{1, 1, 1, 3}, q(-1, 2)}}));
  CHECK(w[1].coefficient({1, 5}) == q(-5, 8));
  CHECK(w[1].coefficient({3, 3}) == q(-3, 16));
  CHECK(w[1].coefficient({1, 1, 7}) == q(35, 16));
  CHECK(w[1].coefficient({3, 3, 3}) == q(3, 8));
  CHECK(w[1].coefficient({1, 1, 5, 5}) == q(-75, 8));
  CHECK(w[1].coefficient({3, 3, 3, 3}) == q(-27, 32));
  CHECK(w[1].terms().size() == 10);
}

TEST_CASE("n = 3 and n = 4 genus zero") {
  GDContext b(3);
  const auto w3 = witten_truncation(b, 0, 4)[0];
  CHECK(w3.coefficient({1, 1, 2}) == 1);
  CHECK(w3.coefficient({2, 2, 2, 2}) == q(2, 3));
  CHECK(w3.coefficient({1, 1, 1, 5}) == q(-5, 3));
  CHECK(w3.coefficient({1, 1, 2, 4}) == -4);
  CHECK(w3.terms().size() == 4);
  GDContext c(4);
  const auto w4 = witten_truncation(c, 0, 4)[0];
  CHECK(w4 == series(4, {{{1, 1, 3}, q(3, 2)},
                         {{1, 2, 2}, q(2)},
                         {{1, 1, 1, 7}, q(-7, 2)},
                         {{1, 1, 2, 6}, q(-12)},
                         {{1, 1, 3, 5}, q(-15, 2)},
                         {{1, 2, 2, 5}, q(-10)},
                         {{2, 2, 3, 3}, q(9)}}));
}

TEST_CASE("coefficient agrees with the full normal form") {
  for (int n : {2, 3}) {
    GDContext ctx(n);
    const auto r = check_witten_reference(ctx, 4);
    INFO(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("quasihomogeneity") {
  for (int n : {2, 3, 4}) {
    GDContext ctx(n);
    const auto r = check_quasihomogeneity(ctx, 1, 4);
    INFO(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("string residual examples") {
  GDContext kdv(2);
  const auto w = witten_truncation(kdv, 1, 5);
  const GradedSeries corrected = string_residual(2, w, 3, StringForm::sign_corrected);
  CHECK(corrected == series(2, {{{5}, q(-5, 8)}}));
  CHECK(residual_genus(2, {5}) == 1);
  const GradedSeries printed = string_residual(2, w, 3, StringForm::printed);
  CHECK(printed.coefficient({5}) == q(-5, 8));
  CHECK(printed.coefficient({1, 7}) == q(35, 4));
  CHECK(printed.coefficient({3, 5}) == q(15, 2));
  CHECK_THROWS_AS(string_residual(2, w, 5, StringForm::printed), BoundError);
}

TEST_CASE("string equation up to the one-point term") {
  for (int n : {2, 3}) {
    GDContext ctx(n);
    const auto r = check_string_equation_up_to_one_point(ctx, 1, 5);
    INFO(r.detail);
    CHECK(r.passed);
    const auto p = check_string_equation(ctx, 1, 5, StringForm::printed);
    CHECK_FALSE(p.passed);
  }
}

TEST_CASE("small phase") {
  GDContext b(3);
  CHECK(genus0_small_phase(b) == series(3, {{{1, 1, 2}, q(1)}, {{2, 2, 2, 2}, q(2, 3)}}));
  for (int n : {2, 3, 4}) {
    GDContext ctx(n);
    const auto r = check_small_phase(ctx);
    INFO(r.detail);
    CHECK(r.passed);
  }
  GDContext c(4);
  const GradedSeries s = genus0_small_phase(c);
  CHECK(s.truncated(4) ==
        series(4, {{{1, 1, 3}, q(3, 2)}, {{1, 2, 2}, q(2)}, {{2, 2, 3, 3}, q(9)}}));
  for (const auto& [key, coeff] : s.terms()) {
    CHECK(key.back() <= 3);
    CHECK(integer_degree(4, key) == 10);
  }
}

TEST_CASE("KdV recursion oracle") {
  CHECK(wk_correlator(0, {0, 0, 0}) == 1);
  CHECK(wk_correlator(0, {0, 0, 0, 1}) == 1);
  CHECK(wk_correlator(0, {0, 0, 0, 0, 2}) == 1);
  CHECK(wk_correlator(0, {0, 0, 0, 1, 1}) == 2);
  CHECK(wk_correlator(1, {1}) == q(1, 24));
  CHECK(wk_correlator(1, {0, 2}) == q(1, 24));
  CHECK(wk_correlator(1, {1, 1}) == q(1, 24));
  CHECK(wk_correlator(0, {0, 0}) == 0);
  CHECK_THROWS_AS(wk_correlator(2, {4}), DomainError);
}

TEST_CASE("correlators") {
  GDContext kdv(2);
  CHECK(correlator(kdv, {2, 0, {{1, 0}, {1, 0}, {1, 0}}}).value == 1);
  CHECK(correlator(kdv, {2, 0, {{1, 0}, {1, 0}, {1, 0}}}, SignConvention::literal).value == -1);
  CHECK(correlator(kdv, {2, 0, {{1, 0}, {1, 0}, {1, 0}, {1, 1}}}).value == 1);
  const CorrelatorKey g1{2, 1, {{1, 0}, {1, 2}}};
  CHECK(correlator(kdv, g1, SignConvention::frozen, CoordinateMap::descendant).value ==
        q(1, 24));
  CHECK(correlator(kdv, g1, SignConvention::frozen, CoordinateMap::linear).value == q(1, 8));
  CHECK(coordinate_scale(2, 1, 2, CoordinateMap::linear) == -5);
  CHECK(coordinate_scale(2, 1, 2, CoordinateMap::descendant) == -15);
  CHECK(coordinate_scale(3, 2, 1, CoordinateMap::descendant) == -10);
  CHECK(correlator(kdv, {2, 1, {{1, 1}}}).diagnostic.size() > 0);
  CHECK_THROWS_AS(correlator(kdv, {2, 0, {{2, 0}, {1, 0}, {1, 0}}}), DomainError);

  auto r = check_correlator_oracle(kdv, 4);
  INFO(r.detail);
  CHECK(r.passed);
  r = check_correlator_values(kdv, 4, CoordinateMap::descendant);
  INFO(r.detail);
  CHECK(r.passed);
  CHECK_FALSE(check_correlator_values(kdv, 4, CoordinateMap::linear).passed);
}

TEST_CASE("series arithmetic") {
  GradedSeries s = series(3, {{{1, 1, 2}, q(1)}, {{2, 2, 2, 2}, q(2, 3)}});
  CHECK(s.derivative(2) == series(3, {{{1, 1}, q(1)}, {{2, 2, 2}, q(8, 3)}}));
  CHECK(s.derivative(1) == series(3, {{{1, 2}, q(2)}}));
  CHECK(s.truncated(3) == series(3, {{{1, 1, 2}, q(1)}}));
  CHECK(s.restricted(1).is_zero());
}

}
