#pragma once

#include <map>

#include "gdh/jet.hpp"

namespace gdh {

// Linear combination of mixed partials d_{i1}..d_{ik} v.
using MultiDerivCombination = std::map<MultiDerivSymbol, Rational>;

// eta_r as a combination of mixed partials of v:
//   sum over n and ordered (i_1..i_n) with sum r of (-1)^{n+1}/(n! i_1..i_n).
// Ordered tuples are aggregated onto their sorted multiset.
MultiDerivCombination eta_raw(int r);

// d_s eta_r = sum over matrices (i over j), i, j >= 1, sum of entries r + s,
// of P_s(matrix) d^{j_1} eta_{i_1} ... d^{j_n} eta_{i_n}.
EtaPolynomial ds_eta(int s, int r);

// B_s^t (2 <= t <= s) expanded in eta symbols: minus the same matrix sum with
// entries totalling t. Throws DomainError outside that range.
EtaPolynomial b_coeff(int s, int t);

// xi_j = sum_n 1/n! sum_{i_1+..+i_n = j} eta_{i_1}..eta_{i_n}.
EtaPolynomial xi_from_eta(int j);

}  // namespace gdh
