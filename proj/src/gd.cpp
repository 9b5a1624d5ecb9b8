#include "gdh/gd.hpp"

#include <algorithm>
#include <numeric>

#include "gdh/errors.hpp"

namespace gdh {

namespace {

void check_indices(const std::vector<int>& indices) {
  if (indices.size() < 2) throw DomainError("an equation needs at least two indices");
  for (int i : indices)
    if (i < 1) throw DomainError("derivative indices must be >= 1");
}

int index_sum(const std::vector<int>& indices) {
  return std::accumulate(indices.begin(), indices.end(), 0);
}

}  // namespace

JetPolynomial elimination_rule(GDContext& ctx, int r) {
  if (r < 1) throw DomainError("elimination rule index must be >= 1");
  ctx.ensure(ctx.n() + r + 1);
  return ctx.elimination(r);
}

JetPolynomial gd_normalize(GDContext& ctx, const JetPolynomial& p) {
  unsigned top = 0;
  for (const auto& [m, c] : p.terms())
    for (const auto& v : m.factors()) top = std::max(top, v.s + v.t);
  // u_{s,t} with s > n needs the rule for u_{s,1}, built at stage s + 1.
  ctx.ensure(static_cast<int>(top) + 1);
  return ctx.normalize(p);
}

JetPolynomial gd_equation(GDContext& ctx, std::vector<int> indices) {
  check_indices(indices);
  std::sort(indices.begin(), indices.end());
  ctx.ensure(index_sum(indices));
  return ctx.reduce(MultiDerivSymbol(std::move(indices)));
}

bool passes_selection_rules(int n, const std::vector<int>& indices, const JetMonomial& monomial) {
  const long k = static_cast<long>(indices.size());
  const long m = static_cast<long>(monomial.degree());
  long t_sum = 0;
  for (const auto& v : monomial.factors()) {
    if (v.s >= static_cast<unsigned>(n) || v.t < 1) return false;
    t_sum += v.t;
  }
  if (weight_of(monomial) != static_cast<unsigned>(index_sum(indices))) return false;
  if (t_sum < m + k - 2) return false;
  return (k + m + t_sum) % 2 == 0;
}

Rational n_coeff(GDContext& ctx, std::vector<int> indices, const JetMonomial& monomial) {
  check_indices(indices);
  if (!passes_selection_rules(ctx.n(), indices, monomial)) return Rational(0);
  return gd_equation(ctx, std::move(indices)).coefficient(monomial);
}

}  // namespace gdh
