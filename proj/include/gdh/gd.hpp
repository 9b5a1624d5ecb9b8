#pragma once

#include <vector>

#include "gdh/hierarchy.hpp"

namespace gdh {

// The n-th Gelfand-Dickey reduction (n = 2: KdV, n = 3: Boussinesq). Built
// directly in the quotient; see Hierarchy.
class GDContext : public Hierarchy {
 public:
  explicit GDContext(int n) : Hierarchy(n) {}

  int n() const { return order(); }

  void ensure(int weight, Execution exec = Execution::serial, int workers = 0) {
    if (weight > built_weight()) build_to(weight, exec, workers);
  }
};

// Normal form of u_{n+r,1}.
JetPolynomial elimination_rule(GDContext& ctx, int r);

// Rewrite every factor into the reduced normal form (s <= n-1). Throws
// DomainError on a bare u_{s,0} with s >= n.
JetPolynomial gd_normalize(GDContext& ctx, const JetPolynomial& p);

// Normal form of d_{i1}..d_{ik} v, k >= 2.
JetPolynomial gd_equation(GDContext& ctx, std::vector<int> indices);

// Coefficient of `monomial` in gd_equation(indices); the selection rules are
// checked first and short-circuit to 0.
Rational n_coeff(GDContext& ctx, std::vector<int> indices, const JetMonomial& monomial);

// The selection rules alone: weight, reduction, sum t >= m + k - 2 and parity
// of k + m + sum t.
bool passes_selection_rules(int n, const std::vector<int>& indices, const JetMonomial& monomial);

}  // namespace gdh
