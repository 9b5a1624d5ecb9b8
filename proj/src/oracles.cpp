#include "gdh/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gdh/errors.hpp"

namespace gdh {

namespace {

// C_s^J J! / (j_1! .. j_n!)
Rational multinomial_term(long s, std::span<const Column> cols) {
  long total = 0;
  mpz_class den = 1;
  for (const auto& c : cols) {
    total += c.j;
    den *= factorial(c.j);
  }
  Rational out(binom(s, total) * factorial(total), den);
  out.canonicalize();
  return out;
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rational> poly_add(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out(std::max(x.size(), y.size()));
  for (std::size_t k = 0; k < x.size(); ++k) out[k] += x[k];
  for (std::size_t k = 0; k < y.size(); ++k) out[k] += y[k];
  trim(out);
  return out;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<Rational> out(x.size() + y.size() - 1);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) out[a + b] += x[a] * y[b];
  trim(out);
  return out;
}

// d/dy, then times y: y A'(y).
std::vector<Rational> y_dy(const std::vector<Rational>& x) {
  std::vector<Rational> out(x.size());
  for (std::size_t k = 1; k < x.size(); ++k) out[k] = x[k] * Rational(static_cast<long>(k));
  trim(out);
  return out;
}

std::vector<Rational> poly_scale(std::vector<Rational> x, const Rational& c) {
  for (auto& v : x) v *= c;
  trim(x);
  return x;
}

}  // namespace

Rational naive_p_coeff(int s, std::span<const Column> cols) {
  const std::size_t n = cols.size();
  if (n == 0) return Rational(0);
  if (std::all_of(cols.begin(), cols.end(), [](const Column& c) { return c.j == 0; }))
    return Rational(0);
  if (n == 1) return Rational(binom(s, cols[0].j));
  Rational out = multinomial_term(s, cols) / Rational(factorial(static_cast<long>(n)));
  long head = 0;
  for (std::size_t q = 1; q < n; ++q) {
    head += cols[q - 1].i + cols[q - 1].j;
    Rational p = naive_p_coeff(s, cols.first(q));
    if (p == 0) continue;
    out -= p * multinomial_term(s - head, cols.subspan(q)) /
           Rational(factorial(static_cast<long>(n - q)));
  }
  return out;
}

XiPolynomial b_coeff_xi(int s, int t) {
  if (t < 2 || t > s) throw DomainError("B_s^t requires 2 <= t <= s");
  auto xi = [](int i, int j) {
    return XiPolynomial(XiSymbol{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  };
  std::vector<XiPolynomial> b(static_cast<std::size_t>(t + 1));
  for (int tt = 2; tt <= t; ++tt) {
    XiPolynomial acc;
    for (int i = 1; i <= tt - 1; ++i) acc -= xi(tt - i, i) * Rational(binom(s, i));
    for (int j = 2; j <= tt - 1; ++j) {
      XiPolynomial inner;
      for (int i = 0; i <= tt - j - 1; ++i) inner += xi(tt - i - j, i) * Rational(binom(s - j, i));
      acc -= b[static_cast<std::size_t>(j)] * inner;
    }
    b[static_cast<std::size_t>(tt)] = std::move(acc);
  }
  return b[static_cast<std::size_t>(t)];
}

EtaPolynomial b_coeff_via_xi(int s, int t) {
  std::map<XiSymbol, EtaPolynomial> memo;
  return substitute<EtaSymbol>(b_coeff_xi(s, t), [&memo](const XiSymbol& x) {
    auto it = memo.find(x);
    if (it == memo.end())
      it = memo.emplace(x, d1_total(xi_from_eta(static_cast<int>(x.i)), x.j)).first;
    return it->second;
  });
}

Rational wk_correlator(int genus, std::vector<int> d) {
  if (genus < 0) throw DomainError("genus must be >= 0");
  if (genus > 1) throw DomainError("string and dilaton equations do not close beyond genus 1");
  for (int x : d)
    if (x < 0) throw DomainError("descendant index must be >= 0");
  const long k = static_cast<long>(d.size());
  const long dim = std::accumulate(d.begin(), d.end(), 0L);
  if (dim != 3L * genus - 3 + k) return Rational(0);
  std::sort(d.begin(), d.end());
  if (genus == 0 && d == std::vector<int>{0, 0, 0}) return Rational(1);
  if (genus == 1 && d == std::vector<int>{1}) return Rational(1, 24);

  static thread_local std::map<std::pair<int, std::vector<int>>, Rational> memo;
  auto key = std::make_pair(genus, d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Rational out(0);
  if (d.front() == 0) {
    std::vector<int> rest(d.begin() + 1, d.end());
    for (std::size_t a = 0; a < rest.size(); ++a) {
      if (rest[a] == 0) continue;
      auto lowered = rest;
      --lowered[a];
      out += wk_correlator(genus, lowered);
    }
  } else if (d.front() == 1) {
    std::vector<int> rest(d.begin() + 1, d.end());
    out = Rational(2L * genus - 2 + static_cast<long>(rest.size())) * wk_correlator(genus, rest);
  }
  memo.emplace(std::move(key), out);
  return out;
}

bool operator==(const OneSoliton::Value& x, const OneSoliton::Value& y) {
  return x.a == y.a && x.b == y.b;
}

OneSoliton::OneSoliton(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw DomainError("soliton needs p != q");
}

Rational OneSoliton::rate(int i) const {
  Rational pi(1), qi(1);
  for (int k = 0; k < i; ++k) {
    pi *= p_;
    qi *= q_;
  }
  return pi - qi;
}

OneSoliton::Value OneSoliton::add(const Value& x, const Value& y) {
  return {poly_add(x.a, y.a), poly_add(x.b, y.b)};
}

OneSoliton::Value OneSoliton::scale(const Value& x, const Rational& c) {
  return {poly_scale(x.a, c), poly_scale(x.b, c)};
}

OneSoliton::Value OneSoliton::multiply(const Value& x, const Value& y) {
  // z^2 = 1 - 4y
  const std::vector<Rational> z2{Rational(1), Rational(-4)};
  return {poly_add(poly_mul(x.a, y.a), poly_mul(poly_mul(x.b, y.b), z2)),
          poly_add(poly_mul(x.a, y.b), poly_mul(x.b, y.a))};
}

OneSoliton::Value OneSoliton::derivative(const Value& x) {
  // (A + B z)' = A'(y) y z + B'(y) y z^2 - 2 y B
  const std::vector<Rational> z2{Rational(1), Rational(-4)};
  const std::vector<Rational> y{Rational(0), Rational(1)};
  return {poly_add(poly_mul(y_dy(x.b), z2), poly_scale(poly_mul(y, x.b), Rational(-2))),
          y_dy(x.a)};
}

const OneSoliton::Value& OneSoliton::theta_derivative(unsigned k) {
  if (v_.empty()) v_.push_back({{Rational(-1, 2)}, {Rational(1, 2)}});  // -sigma
  while (v_.size() < k) v_.push_back(derivative(v_.back()));
  return v_[k - 1];
}

OneSoliton::Value OneSoliton::multi_derivative(const std::vector<int>& indices) {
  Rational c(1);
  for (int i : indices) c *= rate(i);
  return scale(theta_derivative(static_cast<unsigned>(indices.size())), c);
}

OneSoliton::Value OneSoliton::evaluate(const JetPolynomial& p) {
  Value out;
  const Rational a1 = rate(1);
  for (const auto& [m, c] : p.terms()) {
    Value prod{{c}, {}};
    for (const auto& v : m.factors()) {
      Rational r = rate(static_cast<int>(v.s));
      for (unsigned k = 0; k < v.t; ++k) r *= a1;
      prod = multiply(prod, scale(theta_derivative(v.t + 1), r));
    }
    out = add(out, prod);
  }
  return out;
}

}  // namespace gdh
