#pragma once

#include "gdh/eta.hpp"
#include "gdh/hierarchy.hpp"

namespace gdh {

// The full KP hierarchy, extended on demand.
class KPTable : public Hierarchy {
 public:
  KPTable() : Hierarchy(0) {}

  // Build stages up to `weight` (no-op when already there).
  void ensure(int weight, Execution exec = Execution::serial, int workers = 0) {
    if (weight > built_weight()) build_to(weight, exec, workers);
  }
};

// Normal form of d_i d_j v, building the table as far as needed.
JetPolynomial kp_equation(KPTable& table, int i, int j);

// eta_r = (1/r) u_{r,0} + R_r, building the table as far as needed.
JetPolynomial eta_normal(KPTable& table, int r);

// Normal form of d_{i1}..d_{ik} v against the already built table. Throws
// MissingTable when a needed equation is above the built weight.
JetPolynomial reduce_multideriv(const MultiDerivSymbol& sym, const KPTable& table);

// Normal form of a combination of mixed partials (e.g. eta_raw(r)).
JetPolynomial reduce_combination(const MultiDerivCombination& combo, const KPTable& table);

}  // namespace gdh
