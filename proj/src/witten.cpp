#include "gdh/witten.hpp"

#include <algorithm>
#include <numeric>

#include "gdh/combinatorics.hpp"
#include "gdh/errors.hpp"

namespace gdh {

namespace {

void check_indices(const std::vector<int>& indices) {
  if (indices.size() < 2) throw DomainError("a Taylor coefficient needs at least two indices");
  for (int i : indices)
    if (i < 1) throw DomainError("x indices must be >= 1");
}

mpz_class multiplicity_factorials(const std::vector<int>& sorted) {
  mpz_class out = 1;
  for (std::size_t k = 0; k < sorted.size();) {
    std::size_t run = 1;
    while (k + run < sorted.size() && sorted[k + run] == sorted[k]) ++run;
    out *= factorial(static_cast<long>(run));
    k += run;
  }
  return out;
}

GradedSeries::Key with_index(GradedSeries::Key key, int i) {
  key.insert(std::upper_bound(key.begin(), key.end(), i), i);
  return key;
}

// Product of series, no truncation.
GradedSeries times(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries out(a.n());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      GradedSeries::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      std::sort(k.begin(), k.end());
      out.add(std::move(k), ca * cb);
    }
  return out;
}

// Value of a reduced-normal-form polynomial on the slice x_{>=n} = 0 of the
// genus-zero solution, as a polynomial in x_1 .. x_{n-1}.
GradedSeries on_small_phase(int n, const JetPolynomial& p) {
  GradedSeries out(n);
  for (const auto& [m, c] : p.terms()) {
    GradedSeries prod(n);
    prod.add({}, c);
    for (const auto& v : m.factors()) {
      GradedSeries f(n);
      const int s = static_cast<int>(v.s);
      if (v.t == 1) {
        f.add({n - s}, Rational(s * (n - s)));
      } else if (v.t == 2 && s == n - 1) {
        f.add({}, Rational(n - 1));
      }
      prod = times(prod, f);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

}  // namespace

std::optional<Admissibility> admissibility(int n, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  const int total = std::accumulate(indices.begin(), indices.end(), 0);
  if (total % (n + 1) != 0) return std::nullopt;
  const int m = total / (n + 1);
  const int twice_g = m - k + 2;
  if (twice_g < 0 || twice_g % 2 != 0) return std::nullopt;
  return Admissibility{m, twice_g / 2};
}

void GradedSeries::add(Key key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GradedSeries::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedSeries GradedSeries::derivative(int i) const {
  GradedSeries out(n_, genus_, complete_through_ == INT_MAX ? INT_MAX : complete_through_ - 1);
  for (const auto& [key, c] : terms_) {
    auto lo = std::lower_bound(key.begin(), key.end(), i);
    auto hi = std::upper_bound(key.begin(), key.end(), i);
    if (lo == hi) continue;
    Key k = key;
    k.erase(k.begin() + (lo - key.begin()));
    out.add(std::move(k), c * Rational(hi - lo));
  }
  return out;
}

GradedSeries GradedSeries::restricted(int max_index) const {
  GradedSeries out(n_, genus_, complete_through_);
  for (const auto& [key, c] : terms_)
    if (key.empty() || key.back() <= max_index) out.add(key, c);
  return out;
}

GradedSeries GradedSeries::truncated(int max_factors) const {
  GradedSeries out(n_, genus_, std::min(complete_through_, max_factors));
  for (const auto& [key, c] : terms_)
    if (static_cast<int>(key.size()) <= max_factors) out.add(key, c);
  return out;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  for (const auto& [key, c] : o.terms_) add(key, c);
  complete_through_ = std::min(complete_through_, o.complete_through_);
  if (genus_ != o.genus_) genus_.reset();
  return *this;
}

long integer_degree(int n, const GradedSeries::Key& key) {
  long d = 0;
  for (int i : key) d += n + 1 - i;
  return d;
}

Rational witten_coefficient(GDContext& ctx, std::vector<int> indices) {
  check_indices(indices);
  const int n = ctx.n();
  const auto adm = admissibility(n, indices);
  if (!adm) return Rational(0);
  std::sort(indices.begin(), indices.end());
  ctx.ensure(std::accumulate(indices.begin(), indices.end(), 0));

  // Only u_{n-1,2}^m survives at the evaluation point. Each further d_i
  // rewrites one factor, so a monomial with more foreign factors than
  // derivatives left can never get there.
  const JetVariable target{static_cast<std::uint32_t>(n - 1), 2};
  auto keep_within = [&](int budget) {
    return [&target, budget](const JetMonomial& m) {
      int defect = 0;
      for (const auto& v : m.factors()) defect += (v == target) ? 0 : 1;
      return defect <= budget;
    };
  };
  int remaining = static_cast<int>(indices.size()) - 2;
  JetPolynomial p = ctx.pair(indices[0], indices[1]).filtered(keep_within(remaining));
  for (std::size_t k = 2; k < indices.size() && !p.is_zero(); ++k) {
    --remaining;
    p = ctx.partial(indices[k], p).filtered(keep_within(remaining));
  }
  const JetMonomial power(std::vector<JetVariable>(static_cast<std::size_t>(adm->m), target));
  Rational scale(mpz_class(1));
  for (int q = 0; q < adm->m; ++q) scale *= n - 1;
  return p.coefficient(power) * scale;
}

Rational witten_coefficient_reference(GDContext& ctx, std::vector<int> indices) {
  check_indices(indices);
  const int n = ctx.n();
  const auto adm = admissibility(n, indices);
  if (!adm) return Rational(0);
  const JetVariable target{static_cast<std::uint32_t>(n - 1), 2};
  const JetMonomial power(std::vector<JetVariable>(static_cast<std::size_t>(adm->m), target));
  Rational scale(mpz_class(1));
  for (int q = 0; q < adm->m; ++q) scale *= n - 1;
  return n_coeff(ctx, std::move(indices), power) * scale;
}

std::vector<GradedSeries> witten_truncation(GDContext& ctx, int g_max, int k_max, Execution exec,
                                            int workers) {
  if (g_max < 0) throw DomainError("genus bound must be >= 0");
  if (k_max < 2) throw DomainError("insertion bound must be >= 2");
  const int n = ctx.n();

  struct Job {
    int genus;
    std::vector<int> indices;
    Rational value;
  };
  std::vector<Job> jobs;
  int top_weight = 0;
  for (int g = 0; g <= g_max; ++g)
    for (int k = 2; k <= k_max; ++k) {
      const int m = 2 * g - 2 + k;
      if (m < 1) continue;
      top_weight = std::max(top_weight, (n + 1) * m);
      for (auto& parts : integer_partitions((n + 1) * m, k)) {
        if (std::any_of(parts.begin(), parts.end(), [n](int i) { return i % n == 0; })) continue;
        jobs.push_back({g, std::move(parts), Rational(0)});
      }
    }
  ctx.ensure(top_weight, exec, workers);
  for_each_index(jobs.size(), exec, workers,
                 [&](std::size_t k) { jobs[k].value = witten_coefficient(ctx, jobs[k].indices); });

  std::vector<GradedSeries> out;
  for (int g = 0; g <= g_max; ++g) out.emplace_back(n, g, k_max);
  for (const auto& job : jobs) {
    Rational c = job.value / Rational(multiplicity_factorials(job.indices));
    out[static_cast<std::size_t>(job.genus)].add(job.indices, c);
  }
  return out;
}

GradedSeries string_residual(int n, const std::vector<GradedSeries>& w, int max_factors,
                             StringForm form) {
  GradedSeries total(n);
  for (const auto& s : w) {
    if (s.n() != n) throw DomainError("series of a different hierarchy order");
    if (s.complete_through() < max_factors + 1)
      throw BoundError("series complete through " + std::to_string(s.complete_through()) +
                       " factors; the residual through " + std::to_string(max_factors) +
                       " needs " + std::to_string(max_factors + 1));
    total += s;
  }
  GradedSeries out = total.derivative(1);
  for (int i = 1; i < n; ++i) out.add({std::min(i, n - i), std::max(i, n - i)},
                                      Rational(-i * (n - i), 2));
  for (const auto& [key, c] : total.terms()) {
    for (std::size_t pos = 0; pos < key.size(); ++pos) {
      if (pos > 0 && key[pos] == key[pos - 1]) continue;
      const int i = key[pos];
      long mult = 0;
      while (pos + mult < key.size() && key[pos + mult] == i) ++mult;
      GradedSeries::Key rest = key;
      rest.erase(rest.begin() + static_cast<long>(pos));
      Rational coeff = c * Rational(mult);
      coeff *= form == StringForm::printed ? -(i + n) : i + n;
      out.add(with_index(std::move(rest), i + n), coeff);
    }
  }
  return out.truncated(max_factors);
}

std::optional<int> residual_genus(int n, const GradedSeries::Key& key) {
  // deg = (n+1)(2-2g) - n
  const long twice = 2L * (n + 1) - n - integer_degree(n, key);
  if (twice < 0 || twice % (2L * (n + 1)) != 0) return std::nullopt;
  return static_cast<int>(twice / (2L * (n + 1)));
}

GradedSeries genus0_small_phase(GDContext& ctx) {
  const int n = ctx.n();
  ctx.ensure(2 * n);
  std::vector<GradedSeries> dw;
  for (int l = 1; l < n; ++l) {
    GradedSeries d = on_small_phase(n, ctx.elimination(l));
    GradedSeries scaled(n);
    for (const auto& [key, c] : d.terms()) scaled.add(key, c * make_rational(-1, n + l));
    dw.push_back(std::move(scaled));
  }
  GradedSeries w(n, 0);
  for (int l = 1; l < n; ++l)
    for (const auto& [key, c] : dw[static_cast<std::size_t>(l - 1)].terms())
      w.add(with_index(key, l), c * make_rational(n + 1 - l, 2 * (n + 1)));
  for (int l = 1; l < n; ++l)
    if (!(w.derivative(l) == dw[static_cast<std::size_t>(l - 1)]))
      throw InvariantViolation("small phase space derivatives of W are not integrable (x_" +
                               std::to_string(l) + ")");
  return w;
}

Rational coordinate_scale(int n, int k, int m, CoordinateMap map) {
  if (map == CoordinateMap::linear) return Rational(-(m * n + k));
  Rational out(-1);
  for (int l = 0; l <= m; ++l) out *= l * n + k;
  return out;
}

CorrelatorResult correlator(GDContext& ctx, const CorrelatorKey& key, SignConvention convention,
                            CoordinateMap map) {
  if (key.n != ctx.n()) throw DomainError("correlator order does not match the context");
  if (key.genus < 0) throw DomainError("genus must be >= 0");
  CorrelatorResult out;
  for (const auto& [k, m] : key.insertions) {
    if (k < 1 || k > key.n - 1)
      throw DomainError("insertion (" + std::to_string(k) + "," + std::to_string(m) +
                        ") needs 1 <= k <= n-1");
    if (m < 0) throw DomainError("insertion descendant index must be >= 0");
    out.linear_indices.push_back(m * key.n + k);
  }
  std::sort(out.linear_indices.begin(), out.linear_indices.end());
  out.value = 0;
  if (out.linear_indices.size() < 2) {
    out.diagnostic =
        "fewer than two insertions: outside the k >= 2 coefficient formula, reported as 0";
    return out;
  }
  const auto adm = admissibility(key.n, out.linear_indices);
  if (!adm || adm->genus != key.genus) return out;
  Rational denom(1);
  for (const auto& [k, m] : key.insertions) denom *= coordinate_scale(key.n, k, m, map);
  out.value = witten_coefficient(ctx, out.linear_indices) / denom;
  if (convention == SignConvention::frozen) out.value = -out.value;
  return out;
}

}  // namespace gdh
