#pragma once

#include <span>
#include <vector>

#include "gdh/combinatorics.hpp"
#include "gdh/eta.hpp"
#include "gdh/jet.hpp"

namespace gdh {

// Independent reference computations. None of these share code with the
// engine beyond the polynomial containers.

// P_s straight from the three rules: no memo, no pruning.
Rational naive_p_coeff(int s, std::span<const Column> ordered);

// B_s^t from the raw compatibility recursion in xi symbols, then rewritten in
// eta symbols through xi_j = sum_n 1/n! sum eta_{i1}..eta_{in}.
XiPolynomial b_coeff_xi(int s, int t);
EtaPolynomial b_coeff_via_xi(int s, int t);

// <tau_{d1} .. tau_{dk}>_g of the KdV (n = 2) theory for g <= 1, from the
// string and dilaton equations with <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
// Zero off the dimension constraint sum d = 3g - 3 + k. Throws DomainError
// for g >= 2.
Rational wk_correlator(int genus, std::vector<int> descendants);

// The one-soliton v = -ln(1 + e^theta), theta = sum_i (p^i - q^i) x_i.
// Derivatives of v in theta are kept exactly as A(y) + B(y) z with
// sigma = e^theta / (1 + e^theta), y = sigma (1 - sigma), z = 1 - 2 sigma,
// using y' = y z, z' = -2 y and z^2 = 1 - 4 y.
class OneSoliton {
 public:
  struct Value {
    std::vector<Rational> a;  // coefficients in y, constant first
    std::vector<Rational> b;  // coefficient of z
    friend bool operator==(const Value&, const Value&);
  };

  OneSoliton(Rational p, Rational q);

  // theta-coefficient of x_i.
  Rational rate(int i) const;
  // d_{i1} .. d_{ik} v.
  Value multi_derivative(const std::vector<int>& indices);
  // Value of a jet polynomial, u_{s,t} = d_s d_1^t v.
  Value evaluate(const JetPolynomial& p);

  static Value add(const Value& x, const Value& y);
  static Value scale(const Value& x, const Rational& c);
  static Value multiply(const Value& x, const Value& y);
  static Value derivative(const Value& x);

 private:
  // d^k v / d theta^k, k >= 1.
  const Value& theta_derivative(unsigned k);

  Rational p_, q_;
  std::vector<Value> v_;
};

}  // namespace gdh
