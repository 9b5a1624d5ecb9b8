#include "gdh/kp.hpp"

#include <string>

#include "gdh/errors.hpp"

namespace gdh {

JetPolynomial kp_equation(KPTable& table, int i, int j) {
  if (i < 1 || j < 1) throw DomainError("pair indices must be >= 1");
  table.ensure(i + j);
  return table.pair(i, j);
}

JetPolynomial eta_normal(KPTable& table, int r) {
  if (r < 1) throw DomainError("eta_r requires r >= 1");
  table.ensure(r);
  return jet(static_cast<unsigned>(r), 0) * Rational(1, r) + table.eta_rest(r);
}

JetPolynomial reduce_multideriv(const MultiDerivSymbol& sym, const KPTable& table) {
  if (sym.order() == 0) throw DomainError("empty derivative multiset");
  if (sym.order() > 1 && sym.weight() > table.built_weight())
    throw MissingTable("KP table built to weight " + std::to_string(table.built_weight()) +
                       ", need " + std::to_string(sym.weight()));
  return table.reduce(sym);
}

JetPolynomial reduce_combination(const MultiDerivCombination& combo, const KPTable& table) {
  JetPolynomial::Accumulator acc;
  for (const auto& [sym, c] : combo) acc.add(reduce_multideriv(sym, table), c);
  return acc.finish();
}

}  // namespace gdh
