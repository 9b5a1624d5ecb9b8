#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gdh/combinatorics.hpp"
#include "gdh/jet.hpp"
#include "gdh/parallel.hpp"

namespace gdh {

// How d_i eta_j is expanded when a stage builds its pairs.
//   matrix_sum:      the P-coefficient sum over column matrices, term by term.
//   operator_series: Q_m = e^{-phi} d^m e^{phi} and B_i^t computed as truncated
//                    series in k, so partial products are shared across all
//                    pairs of one flow. Same values; much cheaper at high weight.
enum class PairRoute { matrix_sum, operator_series };

// Weight-ordered builder for the hierarchy equations d_i d_j v = R_ij(u) and
// the eta forms eta_r = (1/r) u_{r,0} + R_r(u).
//
// Order 0 is the full KP hierarchy. Order n >= 2 is the n-th Gelfand-Dickey
// reduction: every stored polynomial lives in the quotient where solutions do
// not depend on x_n, so jets u_{s,t} (t >= 1) with s >= n never appear.
//
// Stage w builds, in this order:
//   1. (reduced only) the elimination rule for u_{w-1,1} when w - 1 > n,
//   2. every pair (i, j) with i + j = w, independently of one another,
//   3. the eta remainder R_w.
// Stage w reads only entries of lower stages (plus the rule from step 1), so
// step 2 is the data-parallel kernel.
class Hierarchy {
 public:
  Hierarchy(const Hierarchy&) = delete;
  Hierarchy& operator=(const Hierarchy&) = delete;
  Hierarchy(Hierarchy&&) noexcept;
  Hierarchy& operator=(Hierarchy&&) noexcept;
  virtual ~Hierarchy();

  // 0 for KP, n for the n-th Gelfand-Dickey reduction.
  int order() const { return n_; }
  bool reduced() const { return n_ > 0; }

  // Run stages up to `weight`. Parallel execution uses OpenMP over the pairs
  // of one stage; workers <= 0 means the OpenMP default.
  void build_to(int weight, Execution exec = Execution::serial, int workers = 0);
  int built_weight() const { return built_weight_; }

  // Select the expansion used by later stages (stored entries are unaffected).
  void set_route(PairRoute route) { route_ = route; }
  PairRoute route() const { return route_; }

  // Normal form of d_i d_j v. Throws MissingTable above the built weight.
  const JetPolynomial& pair(int i, int j) const;

  // eta_r - (1/r) u_{r,0}.
  const JetPolynomial& eta_rest(int r) const;

  // Reduced only: normal form of u_{n+r,1}.
  const JetPolynomial& elimination(int r) const;

  // Normal form of the single jet u_{s,t}. Bare u_{s,0} with s >= n has no
  // reduced normal form and throws DomainError.
  JetPolynomial jet_normal(unsigned s, unsigned t) const;

  // Replace every factor by its normal form.
  JetPolynomial normalize(const JetPolynomial& p) const;

  // d_i of a normal-form polynomial, via d_i u_{s,t} = d1^t(pair(i, s)).
  JetPolynomial partial(int i, const JetPolynomial& p) const;

  // Normal form of d_{i1}..d_{ik} v (memoized on the sorted indices).
  const JetPolynomial& reduce(const MultiDerivSymbol& sym) const;

  // Same, applying the derivatives in the given order: pair(o0, o1) first,
  // then d_{o2}, d_{o3}, ... Not memoized.
  JetPolynomial reduce_in_order(const std::vector<int>& order) const;

  // d_i d_j v recomputed through d_i eta_j with i as the flow of the P sum,
  // bypassing the stored (symmetric) entry.
  JetPolynomial derive_pair(int i, int j) const;

  // Stored tables, for persistence.
  const std::map<std::pair<int, int>, JetPolynomial>& pairs() const { return pairs_; }
  const std::map<int, JetPolynomial>& eta_rests() const { return rests_; }
  const std::map<int, JetPolynomial>& eliminations() const { return elims_; }

  // Install previously persisted tables (all stages <= weight). Derived caches
  // are cleared. The caller is responsible for validating the content.
  void restore(int weight, std::map<std::pair<int, int>, JetPolynomial> pairs,
               std::map<int, JetPolynomial> rests, std::map<int, JetPolynomial> elims);

  // Structural checks on every stored entry; throws InvariantViolation.
  void validate() const;

 protected:
  explicit Hierarchy(int order);

 private:
  struct Caches;
  void build_stage(int w, Execution exec, int workers);
  JetPolynomial derive_pair_impl(int i, int j, std::optional<unsigned> symbolic_head) const;
  // Normal form of d1^t eta_s; the tail variant drops the (1/s) u_{s,t} part.
  const JetPolynomial& eta_derivative(unsigned s, unsigned t) const;
  JetPolynomial eta_derivative_tail(unsigned s, unsigned t) const;
  const JetPolynomial& prolonged_pair(int i, unsigned s, unsigned t) const;
  const JetPolynomial& jet_cached(unsigned s, unsigned t) const;
  const std::vector<std::pair<ColumnMultiset, Rational>>& matrix_terms(int flow, int total) const;
  JetPolynomial eta_rest_from_stage(int w, Execution exec, int workers) const;
  void build_stage_series(int w, Execution exec, int workers);
  void extend_series(int max_m, int weight, Execution exec, int workers);
  void series_top(int max_m, int w, Execution exec, int workers);
  const std::vector<JetPolynomial>& flow_b(int flow);
  JetPolynomial series_ds_eta(int flow, int w) const;

  int n_ = 0;
  int built_weight_ = 1;
  PairRoute route_ = PairRoute::operator_series;
  // Operator-series state: q_[m][w] is the weight-w coefficient of
  // Q_m = e^{-phi} d^m e^{phi}, shared by every flow; b_[i][t] = B_i^t.
  std::vector<std::vector<JetPolynomial>> q_;
  std::map<int, std::vector<JetPolynomial>> b_;
  std::vector<JetPolynomial> q_top_;  // next-weight slices without the d eta_{w-1} term
  std::map<std::pair<int, int>, JetPolynomial> pairs_;
  std::map<int, JetPolynomial> rests_;
  std::map<int, JetPolynomial> elims_;
  std::unique_ptr<Caches> caches_;
};

}  // namespace gdh
