#include "gdh/eta.hpp"

#include "gdh/combinatorics.hpp"
#include "gdh/errors.hpp"

namespace gdh {

namespace {

// prod(multiplicity!) over the runs of a sorted sequence.
template <class Seq>
mpz_class multiplicity_factorials(const Seq& sorted) {
  mpz_class out = 1;
  for (std::size_t k = 0; k < sorted.size();) {
    std::size_t run = 1;
    while (k + run < sorted.size() && sorted[k + run] == sorted[k]) ++run;
    out *= factorial(static_cast<long>(run));
    k += run;
  }
  return out;
}

EtaPolynomial matrix_sum(int s, int total) {
  EtaPolynomial::Accumulator acc;
  for (const auto& ms : column_multisets(total, s)) {
    Rational c = p_coeff_sym(s, ms);
    if (c == 0) continue;
    std::vector<EtaSymbol> factors;
    factors.reserve(ms.size());
    for (const auto& col : ms.columns())
      factors.push_back({static_cast<std::uint32_t>(col.i), static_cast<std::uint32_t>(col.j)});
    acc.add(Monomial<EtaSymbol>(std::move(factors)), c);
  }
  return acc.finish();
}

}  // namespace

MultiDerivCombination eta_raw(int r) {
  if (r < 1) throw DomainError("eta_r requires r >= 1");
  MultiDerivCombination out;
  for (const auto& parts : integer_partitions(r)) {
    // (-1)^{n+1}/(n! prod i) times n!/prod(mult!) orderings.
    mpz_class den = multiplicity_factorials(parts);
    for (int i : parts) den *= i;
    Rational c(parts.size() % 2 == 1 ? 1 : -1, den);
    c.canonicalize();
    out.emplace(MultiDerivSymbol(parts), c);
  }
  return out;
}

EtaPolynomial ds_eta(int s, int r) {
  if (s < 1 || r < 1) throw DomainError("d_s eta_r requires s, r >= 1");
  return matrix_sum(s, r + s);
}

EtaPolynomial b_coeff(int s, int t) {
  if (t < 2 || t > s) throw DomainError("B_s^t requires 2 <= t <= s");
  return -matrix_sum(s, t);
}

EtaPolynomial xi_from_eta(int j) {
  if (j < 1) throw DomainError("xi_j requires j >= 1");
  EtaPolynomial::Accumulator acc;
  for (const auto& parts : integer_partitions(j)) {
    std::vector<EtaSymbol> factors;
    for (int i : parts) factors.push_back({static_cast<std::uint32_t>(i), 0});
    Rational c(1, multiplicity_factorials(parts));
    c.canonicalize();
    acc.add(Monomial<EtaSymbol>(std::move(factors)), c);
  }
  return acc.finish();
}

}  // namespace gdh
