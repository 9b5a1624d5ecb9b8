#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdh/polynomial.hpp"

namespace gdh {

// u_{s,t} = d_s d_1^t v. The pure derivative d_1^d v (d >= 1) is always
// stored as (s = 1, t = d - 1).
struct JetVariable {
  std::uint32_t s = 1;
  std::uint32_t t = 0;

  JetVariable d1() const { return {s, t + 1}; }
  std::uint32_t weight() const { return s + t; }
  std::size_t hash() const { return (std::size_t{s} << 32) ^ t; }

  friend bool operator==(const JetVariable&, const JetVariable&) = default;
  friend auto operator<=>(const JetVariable&, const JetVariable&) = default;
};

// d_1^j eta_i, used by the Baker-Akhiezer expansion layer.
struct EtaSymbol {
  std::uint32_t i = 1;
  std::uint32_t j = 0;

  EtaSymbol d1() const { return {i, j + 1}; }
  std::size_t hash() const { return (std::size_t{i} << 32) ^ j ^ 0x9e3779b9u; }

  friend bool operator==(const EtaSymbol&, const EtaSymbol&) = default;
  friend auto operator<=>(const EtaSymbol&, const EtaSymbol&) = default;
};

// d_1^j xi_i; only the raw compatibility recursion works in these symbols.
struct XiSymbol {
  std::uint32_t i = 1;
  std::uint32_t j = 0;

  XiSymbol d1() const { return {i, j + 1}; }
  std::size_t hash() const { return (std::size_t{i} << 32) ^ j ^ 0x7f4a7c15u; }

  friend bool operator==(const XiSymbol&, const XiSymbol&) = default;
  friend auto operator<=>(const XiSymbol&, const XiSymbol&) = default;
};

// d_{i1} ... d_{ik} v with the index multiset kept sorted.
class MultiDerivSymbol {
 public:
  MultiDerivSymbol() = default;
  explicit MultiDerivSymbol(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int order() const { return static_cast<int>(indices_.size()); }
  int weight() const;

  friend bool operator==(const MultiDerivSymbol&, const MultiDerivSymbol&) = default;
  friend auto operator<=>(const MultiDerivSymbol&, const MultiDerivSymbol&) = default;

 private:
  std::vector<int> indices_;
};

using JetMonomial = Monomial<JetVariable>;
using JetPolynomial = Polynomial<JetVariable>;
using EtaPolynomial = Polynomial<EtaSymbol>;
using XiPolynomial = Polynomial<XiSymbol>;

inline JetVariable u(std::uint32_t s, std::uint32_t t) { return {s, t}; }
inline JetPolynomial jet(std::uint32_t s, std::uint32_t t) { return JetPolynomial(u(s, t)); }

// Sum of (s + t) over factors.
unsigned weight_of(const JetMonomial& m);

// Total x_1 derivative: Leibniz rule with u_{s,t} -> u_{s,t+1}. Works for any
// symbol family with a d1() successor.
template <class Var>
Polynomial<Var> d1_total(const Polynomial<Var>& p) {
  typename Polynomial<Var>::Accumulator acc;
  for (const auto& [m, c] : p.terms()) {
    const auto& f = m.factors();
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k > 0 && f[k] == f[k - 1]) continue;
      std::size_t mult = 1;
      while (k + mult < f.size() && f[k + mult] == f[k]) ++mult;
      acc.add(m.replaced(k, f[k].d1()), c * Rational(static_cast<long>(mult)));
    }
  }
  return acc.finish();
}

template <class Var>
Polynomial<Var> d1_total(const Polynomial<Var>& p, unsigned times) {
  Polynomial<Var> out = p;
  for (unsigned k = 0; k < times; ++k) out = d1_total(out);
  return out;
}

// True when every monomial has weight exactly w.
bool is_homogeneous(const JetPolynomial& p, unsigned w);

}  // namespace gdh
