#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdh/gd.hpp"

namespace gdh {

// m = sum(i) / (n + 1) and genus g = (m - k + 2) / 2 of an admissible index
// multiset; nullopt when either is not a nonnegative integer.
struct Admissibility {
  int m = 0;
  int genus = 0;
};
std::optional<Admissibility> admissibility(int n, const std::vector<int>& indices);

// Sparse series in x_1, x_2, ...; a monomial x_{i1}..x_{ik} is keyed by the
// sorted index list. `complete_through` records the largest number of x
// factors up to which every coefficient is present.
class GradedSeries {
 public:
  using Key = std::vector<int>;

  explicit GradedSeries(int n, std::optional<int> genus = std::nullopt,
                        int complete_through = INT_MAX)
      : n_(n), genus_(genus), complete_through_(complete_through) {}

  int n() const { return n_; }
  std::optional<int> genus_tag() const { return genus_; }
  int complete_through() const { return complete_through_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Key key, const Rational& c);
  Rational coefficient(const Key& key) const;

  // d / dx_i.
  GradedSeries derivative(int i) const;
  // Terms with every index <= max_index (x_j = 0 for j > max_index).
  GradedSeries restricted(int max_index) const;
  // Terms with at most `max_factors` x factors.
  GradedSeries truncated(int max_factors) const;

  GradedSeries& operator+=(const GradedSeries& o);
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::optional<int> genus_;
  int complete_through_;
  std::map<Key, Rational> terms_;
};

// sum_j (n + 1 - i_j): the quasidegree times n, under which W^g is
// homogeneous of degree (n + 1)(2 - 2g).
long integer_degree(int n, const GradedSeries::Key& key);

// Symmetric derivative d_{i1}..d_{ik} W(0) = (n-1)^m [u_{n-1,2}^m] of the
// reduced equation for the indices. Zero for inadmissible keys. The context is
// extended to weight sum(i) when needed.
Rational witten_coefficient(GDContext& ctx, std::vector<int> indices);

// Same value read off the full normal form (n_coeff); slow, for testing.
Rational witten_coefficient_reference(GDContext& ctx, std::vector<int> indices);

// W^0 .. W^{g_max}, each with every monomial of 2 .. k_max factors. Indices
// divisible by n are skipped (those flows are trivial).
std::vector<GradedSeries> witten_truncation(GDContext& ctx, int g_max, int k_max,
                                            Execution exec = Execution::serial,
                                            int workers = 0);

// Which form of the string equation to test.
//   printed:        dW/dx_1 = 1/2 sum ij x_i x_j + sum_i (i+n) x_{i+n} dW/dx_i
//   sign_corrected: dW/dx_1 = 1/2 sum ij x_i x_j - sum_i (i+n) x_{i+n} dW/dx_i
enum class StringForm { printed, sign_corrected };

// LHS - RHS of the string equation on sum(w), keeping monomials with at most
// `max_factors` x factors. Throws BoundError when a series is not complete
// through max_factors + 1 factors.
GradedSeries string_residual(int n, const std::vector<GradedSeries>& w, int max_factors,
                             StringForm form = StringForm::printed);

// Genus whose strata a residual monomial belongs to, or nullopt.
std::optional<int> residual_genus(int n, const GradedSeries::Key& key);

// W restricted to x_n = x_{n+1} = ... = 0, from the elimination rules alone:
// on that slice d_l W = -u_{n+l,1} / (n+l) with u_{s,1} = s(n-s) x_{n-s},
// u_{n-1,2} = n-1 and every other jet zero; W follows from the Euler identity.
// Throws InvariantViolation if the derivatives are not integrable.
GradedSeries genus0_small_phase(GDContext& ctx);

// Insertions tau_{k,m}, 1 <= k <= n-1, m >= 0; linear index j = m n + k.
struct CorrelatorKey {
  int n = 2;
  int genus = 0;
  std::vector<std::pair<int, int>> insertions;  // (k, m)
};

// frozen:  value = -f / prod(lambda_j)  (normalized so <tau_{1,0}^3>_0 = +1 for n = 2)
// literal: value =  f / prod(lambda_j)
enum class SignConvention { frozen, literal };

// Scale lambda_j of t_{k,m} = lambda_j x_j, j = m n + k.
//   linear:     lambda_j = -j
//   descendant: lambda_j = -k (n+k) (2n+k) ... (m n+k)
// The two agree for m <= 1.
enum class CoordinateMap { linear, descendant };

Rational coordinate_scale(int n, int k, int m, CoordinateMap map);

struct CorrelatorResult {
  Rational value;
  std::vector<int> linear_indices;
  std::string diagnostic;  // empty unless the value is a placeholder
};

CorrelatorResult correlator(GDContext& ctx, const CorrelatorKey& key,
                            SignConvention convention = SignConvention::frozen,
                            CoordinateMap map = CoordinateMap::linear);

}  // namespace gdh
