#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gdh/jet.hpp"
#include "gdh/rational.hpp"

using namespace gdh;

TEST_SUITE("exact") {

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::exception);
}

TEST_CASE("rational json round trip") {
  const Rational q = make_rational(-35, 16);
  const auto j = to_json(q);
  CHECK(j["num"] == "-35");
  CHECK(j["den"] == "16");
  CHECK(rational_from_json(j) == q);
  CHECK_THROWS(rational_from_json(nlohmann::json{{"num", "1"}, {"den", "0"}}));
  CHECK_THROWS(rational_from_json(nlohmann::json{{"num", "2"}, {"den", "4"}}));
  CHECK_THROWS(rational_from_json(nlohmann::json{{"num", "x"}, {"den", "1"}}));
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 3), var(1, 3);
  auto random_poly = [&] {
    JetPolynomial p;
    for (int k = 0; k < 4; ++k) {
      JetPolynomial m(Rational(small(rng)));
      for (int f = var(rng) - 1; f > 0; --f) m = m * jet(var(rng), var(rng) - 1);
      p += m;
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(d1_total(a * b) == d1_total(a) * b + a * d1_total(b));
  }
}

TEST_CASE("coefficients and zero terms") {
  JetPolynomial p = jet(2, 1) * make_rational(3, 2) + jet(1, 1) * jet(1, 1);
  CHECK(p.coefficient(JetMonomial{u(2, 1)}) == make_rational(3, 2));
  CHECK(p.coefficient(JetMonomial{u(1, 1), u(1, 1)}) == 1);
  CHECK(p.coefficient(JetMonomial{u(3, 0)}) == 0);
  p -= jet(2, 1) * make_rational(3, 2);
  CHECK(p.size() == 1);
}

TEST_CASE("total derivative shifts t and respects weight") {
  const JetPolynomial p = jet(2, 0) * jet(1, 1);
  const JetPolynomial d = d1_total(p);
  CHECK(d == jet(2, 1) * jet(1, 1) + jet(2, 0) * jet(1, 2));
  for (const auto& [m, c] : d.terms()) CHECK(weight_of(m) == 5);
  CHECK(d1_total(p, 3) == d1_total(d1_total(d1_total(p))));
}

TEST_CASE("multi-derivative symbols sort their indices") {
  const MultiDerivSymbol a({3, 1, 2}), b({2, 3, 1});
  CHECK(a == b);
  CHECK(a.weight() == 6);
  CHECK(a.order() == 3);
}

}
