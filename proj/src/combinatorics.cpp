#include "gdh/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "gdh/errors.hpp"

namespace gdh {

namespace {

void check_columns(const std::vector<Column>& cols) {
  if (cols.empty()) throw DomainError("column matrix must have at least one column");
  for (const auto& c : cols)
    if (c.i < 1 || c.j < 0) throw DomainError("column requires i >= 1 and j >= 0");
}

// (j_1 + ... + j_n)! / (j_1! ... j_n!)
mpz_class multinomial(std::span<const Column> cols) {
  long total = 0;
  mpz_class den = 1;
  for (const auto& c : cols) {
    total += c.j;
    den *= factorial(c.j);
  }
  return factorial(total) / den;
}

long j_sum(std::span<const Column> cols) {
  long s = 0;
  for (const auto& c : cols) s += c.j;
  return s;
}

// Memo tables shared by all threads. Values are deterministic, so a racing
// duplicate insert is harmless.
struct PCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, std::vector<Column>>, Rational> ordered;
  std::map<std::pair<int, std::vector<Column>>, Rational> symmetric;
};

PCache& cache() {
  static PCache c;
  return c;
}

template <class Compute>
Rational memoized(std::map<std::pair<int, std::vector<Column>>, Rational>& table, int s,
                  std::span<const Column> cols, Compute&& compute) {
  auto& c = cache();
  std::pair<int, std::vector<Column>> key{s, std::vector<Column>(cols.begin(), cols.end())};
  {
    std::shared_lock lock(c.mutex);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  Rational value = compute();
  std::unique_lock lock(c.mutex);
  table.try_emplace(std::move(key), value);
  return value;
}

Rational p_ordered(int s, std::span<const Column> cols) {
  if (j_sum(cols) == 0) return Rational(0);  // rule 1
  if (cols.size() == 1) return Rational(binom(s, cols[0].j));  // rule 2
  // P_s vanishes once the j-sum exceeds s (every term carries a binomial that
  // does); skipping those keeps the memo small.
  if (j_sum(cols) > s) return Rational(0);
  return memoized(cache().ordered, s, cols, [&] {
    const long n = static_cast<long>(cols.size());
    Rational value(binom(s, j_sum(cols)) * multinomial(cols), factorial(n));
    value.canonicalize();
    long prefix_sum = 0;  // i_1 + .. + i_q + j_1 + .. + j_q
    for (long q = 1; q < n; ++q) {
      prefix_sum += cols[q - 1].i + cols[q - 1].j;
      auto tail = cols.subspan(static_cast<std::size_t>(q));
      mpz_class b = binom(s - prefix_sum, j_sum(tail));
      if (b == 0) continue;
      Rational head = p_ordered(s, cols.first(static_cast<std::size_t>(q)));
      if (head == 0) continue;
      Rational term(b * multinomial(tail), factorial(n - q));
      term.canonicalize();
      value -= head * term;
    }
    return value;
  });
}

}  // namespace

ColumnMatrix::ColumnMatrix(std::vector<Column> columns) : columns_(std::move(columns)) {
  check_columns(columns_);
}

ColumnMultiset::ColumnMultiset(std::vector<Column> columns) : columns_(std::move(columns)) {
  check_columns(columns_);
  std::sort(columns_.begin(), columns_.end());
}

mpz_class ColumnMultiset::orbit_size() const {
  mpz_class out = factorial(static_cast<long>(columns_.size()));
  for (std::size_t k = 0; k < columns_.size();) {
    std::size_t run = 1;
    while (k + run < columns_.size() && columns_[k + run] == columns_[k]) ++run;
    out /= factorial(static_cast<long>(run));
    k += run;
  }
  return out;
}

int ColumnMultiset::i_sum() const {
  int s = 0;
  for (const auto& c : columns_) s += c.i;
  return s;
}

int ColumnMultiset::j_sum() const {
  int s = 0;
  for (const auto& c : columns_) s += c.j;
  return s;
}

mpz_class binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

mpz_class factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational p_coeff(int s, const ColumnMatrix& m) { return p_coeff(s, std::span(m.columns())); }

Rational p_coeff(int s, std::span<const Column> ordered) {
  if (s < 1) throw DomainError("P_s requires s >= 1");
  return p_ordered(s, ordered);
}

Rational p_coeff_sym(int s, const ColumnMultiset& ms) {
  if (s < 1) throw DomainError("P_s requires s >= 1");
  const auto& cols = ms.columns();
  if (ms.j_sum() == 0 || ms.j_sum() > s) return Rational(0);
  if (cols.size() == 1) return p_ordered(s, cols);
  return memoized(cache().symmetric, s, cols, [&] {
    std::vector<Column> perm = cols;  // sorted, so next_permutation walks the orbit once
    Rational sum(0);
    do {
      sum += p_ordered(s, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
  });
}

std::vector<ColumnMultiset> column_multisets(int total, int max_j_sum, int min_j) {
  std::vector<ColumnMultiset> out;
  std::vector<Column> current;
  // Columns are emitted in non-decreasing order so each multiset appears once.
  auto rec = [&](auto&& self, int remaining, int j_budget, Column floor) -> void {
    if (remaining == 0) {
      if (!current.empty()) out.emplace_back(current);
      return;
    }
    for (int i = floor.i; i + min_j <= remaining; ++i) {
      int j_start = (i == floor.i) ? std::max(floor.j, min_j) : min_j;
      for (int j = j_start; i + j <= remaining && j <= j_budget; ++j) {
        current.push_back({i, j});
        self(self, remaining - i - j, j_budget - j, Column{i, j});
        current.pop_back();
      }
    }
  };
  if (total > 0) rec(rec, total, max_j_sum, Column{1, min_j});
  return out;
}

std::vector<std::vector<int>> integer_partitions(int total, int exact_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int floor) -> void {
    if (remaining == 0) {
      if (exact_parts == 0 || static_cast<int>(current.size()) == exact_parts) out.push_back(current);
      return;
    }
    if (exact_parts > 0) {
      int slots = exact_parts - static_cast<int>(current.size());
      if (slots <= 0 || remaining < slots * floor) return;
    }
    for (int p = floor; p <= remaining; ++p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (total > 0) rec(rec, total, 1);
  return out;
}

std::size_t p_cache_size() {
  auto& c = cache();
  std::shared_lock lock(c.mutex);
  return c.ordered.size() + c.symmetric.size();
}

}  // namespace gdh
