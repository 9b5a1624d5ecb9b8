#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gdh/rational.hpp"

namespace gdh {

// One column (i over j) of the index matrices that label P, R and N.
struct Column {
  int i = 1;  // >= 1
  int j = 0;  // >= 0

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

// Ordered list of columns. P_s is not symmetric in its columns, so order
// matters here.
class ColumnMatrix {
 public:
  explicit ColumnMatrix(std::vector<Column> columns);
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }

 private:
  std::vector<Column> columns_;
};

// Multiset of columns, kept sorted. Represents the permutation orbit of any
// matrix with these columns.
class ColumnMultiset {
 public:
  explicit ColumnMultiset(std::vector<Column> columns);
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }

  // n! / prod(multiplicity!) distinct orderings.
  mpz_class orbit_size() const;
  int i_sum() const;
  int j_sum() const;

  friend bool operator==(const ColumnMultiset&, const ColumnMultiset&) = default;
  friend auto operator<=>(const ColumnMultiset&, const ColumnMultiset&) = default;

 private:
  std::vector<Column> columns_;
};

// a!/(b!(a-b)!) for 0 <= b <= a, zero otherwise (in particular for every a < 0).
mpz_class binom(long a, long b);
mpz_class factorial(long n);

// P_s of an ordered matrix, by the three-rule recurrence. The q-th subtracted
// term of rule 3 uses the shifted binomial subscript s - (i_1+..+i_q + j_1+..+j_q).
Rational p_coeff(int s, const ColumnMatrix& m);
Rational p_coeff(int s, std::span<const Column> ordered);

// Sum of P_s over every distinct column ordering.
Rational p_coeff_sym(int s, const ColumnMultiset& ms);

// Every column multiset with columns i >= 1, j >= min_j whose entries sum to
// `total` (sum of i + j over columns) and whose j-sum is at most max_j_sum.
// Output is in ascending canonical order.
std::vector<ColumnMultiset> column_multisets(int total, int max_j_sum, int min_j = 1);

// Partitions of `total` into positive parts, each sorted ascending. When
// exact_parts > 0 only partitions with that many parts are produced.
std::vector<std::vector<int>> integer_partitions(int total, int exact_parts = 0);

// Number of memoized ordered / symmetric P values (diagnostics).
std::size_t p_cache_size();

}  // namespace gdh
