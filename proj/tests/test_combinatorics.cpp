#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gdh/checks.hpp"
#include "gdh/combinatorics.hpp"
#include "gdh/eta.hpp"
#include "gdh/oracles.hpp"

using namespace gdh;

TEST_SUITE("combinatorics") {

TEST_CASE("binomials and factorials") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("partitions") {
  CHECK(integer_partitions(5).size() == 7);
  CHECK(integer_partitions(6, 2).size() == 3);
  for (const auto& p : integer_partitions(8)) {
    int s = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      s += p[k];
      if (k) CHECK(p[k - 1] <= p[k]);
    }
    CHECK(s == 8);
  }
}

TEST_CASE("orbit size counts distinct orderings") {
  CHECK(ColumnMultiset({{1, 0}, {1, 0}, {2, 1}}).orbit_size() == 3);
  CHECK(ColumnMultiset({{1, 1}, {2, 1}, {3, 1}}).orbit_size() == 6);
}

TEST_CASE("P_s against the unmemoized recurrence") {
  const auto r = check_p_against_naive(300, 11);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("P_s depends on column order") {
  const std::vector<Column> a{{1, 1}, {2, 0}, {1, 2}};
  const std::vector<Column> b{{1, 2}, {1, 1}, {2, 0}};
  bool differs = false;
  for (int s = 1; s <= 8; ++s) {
    CHECK(p_coeff(s, a) == naive_p_coeff(s, a));
    CHECK(p_coeff(s, b) == naive_p_coeff(s, b));
    differs = differs || p_coeff(s, a) != p_coeff(s, b);
  }
  CHECK(differs);
}

TEST_CASE("symmetrized P_s sums over distinct orderings") {
  std::vector<Column> cols{{1, 0}, {1, 1}, {1, 1}, {2, 0}};
  for (int s = 1; s <= 8; ++s) {
    Rational sum = 0;
    std::sort(cols.begin(), cols.end());
    do sum += naive_p_coeff(s, cols);
    while (std::next_permutation(cols.begin(), cols.end()));
    CHECK(p_coeff_sym(s, ColumnMultiset(cols)) == sum);
  }
}

TEST_CASE("zero-column padding identity, small batch") {
  const auto r = check_padding_identity(100, 3);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("B coefficients against the raw recursion") {
  const auto r = check_b_cross(6);
  INFO(r.detail);
  CHECK(r.passed);
  CHECK(b_coeff(4, 2) == b_coeff_via_xi(4, 2));
}

TEST_CASE("column multisets are canonical and bounded") {
  const auto all = column_multisets(6, 3);
  CHECK_FALSE(all.empty());
  for (std::size_t k = 0; k < all.size(); ++k) {
    int total = 0;
    for (const auto& c : all[k].columns()) total += c.i + c.j;
    CHECK(total == 6);
    CHECK(all[k].j_sum() <= 3);
    if (k) CHECK(all[k - 1] < all[k]);
  }
}

}
