#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdh/gd.hpp"
#include "gdh/kp.hpp"
#include "gdh/witten.hpp"

namespace gdh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Printed low-order equations: KP (2,2), (2,3), (3,3).
CheckResult check_kp_printed(KPTable& kp);
// Boussinesq (n = 3, {2,2}) and the n = 4 equations {2,2}, {2,3}, {3,3}.
CheckResult check_gd_printed();

// Coefficient of u_{i+j-1,1} in d_i d_j v is ij/(i+j-1), 2 <= i <= j.
CheckResult check_leading_coefficient(KPTable& kp, int max_sum);
// No monomial with sum(t + 1) odd in any KP pair with i + j <= max_sum.
CheckResult check_kp_parity(KPTable& kp, int max_sum);
// Every monomial of every reduced equation with k <= max_k indices and
// sum(i) <= (n + 1) max_k passes the selection rules.
CheckResult check_gd_structure(const std::vector<int>& orders, int max_k,
                               Execution exec = Execution::serial, int workers = 0);
// Random instances of the zero-column padding identity for P_s.
CheckResult check_padding_identity(int instances, std::uint64_t seed, int max_s = 12,
                                   int max_m = 3, int max_k = 3);
// Library P_s against the unpruned, unmemoized recurrence.
CheckResult check_p_against_naive(int instances, std::uint64_t seed);
// d_i d_j d_k v is the same for every order of application, i + j + k <= max_sum.
CheckResult check_flow_compatibility(KPTable& kp, int max_sum);
// B_s^t from the matrix sum equals the raw xi recursion, s <= max_s.
CheckResult check_b_cross(int max_s);
// eta_r from the mixed-partial expansion reduces to (1/r) u_{r,0} + R_r.
CheckResult check_eta_forms(KPTable& kp, int max_r);
// Pair from the eta route, with either index as flow, equals the stored pair.
CheckResult check_pair_symmetry(KPTable& kp, int max_sum);
// Both expansion routes give identical tables (order 0 = KP).
CheckResult check_route_agreement(int order, int weight);
// KP pairs (and, for q = -p, the n = 2 reduction) hold on one-soliton solutions.
CheckResult check_soliton(KPTable& kp, int max_sum);
CheckResult check_kdv_soliton(GDContext& kdv, int max_sum);

// String equation on witten_truncation(g <= g_max, k <= k_max).
CheckResult check_string_equation(GDContext& ctx, int g_max, int k_max, StringForm form,
                                  Execution exec = Execution::serial, int workers = 0);
// Same with the sign-corrected form; the only allowed leftover is the genus-one
// one-point term x_{2n+1}, which the k >= 2 coefficient formula cannot supply.
CheckResult check_string_equation_up_to_one_point(GDContext& ctx, int g_max, int k_max,
                                                  Execution exec = Execution::serial,
                                                  int workers = 0);
// n = 2: |<tau_0^3>_0| and |<tau_0^3 tau_1>_0| against the string/dilaton
// recursion, and the frozen sign agrees with it on every correlator with
// g <= 1 and 2..k_max insertions.
CheckResult check_correlator_oracle(GDContext& kdv, int k_max);
// n = 2: every correlator with g <= 1, 2..k_max insertions matches the
// recursion exactly under `map`.
CheckResult check_correlator_values(GDContext& kdv, int k_max, CoordinateMap map);
// genus0_small_phase equals the x_{>=n} = 0 slice of W^0.
CheckResult check_small_phase(GDContext& ctx);
// Every coefficient of W^g is quasihomogeneous of degree (n+1)(2-2g) and
// sits in exactly one genus.
CheckResult check_quasihomogeneity(GDContext& ctx, int g_max, int k_max);
// witten_coefficient against the full normal form.
CheckResult check_witten_reference(GDContext& ctx, int k_max);

}  // namespace gdh
