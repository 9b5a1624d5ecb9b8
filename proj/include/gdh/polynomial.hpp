#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gdh/rational.hpp"

namespace gdh {

// A commutative monomial over symbols of type Var, stored as the sorted
// multiset of its factors. Var must be totally ordered and provide hash().
template <class Var>
class Monomial {
 public:
  // Most monomials have only a few factors; keep those off the heap.
  using Storage = boost::container::small_vector<Var, 6>;

  Monomial() = default;
  Monomial(std::initializer_list<Var> factors) : factors_(factors) { canonicalize(); }
  explicit Monomial(const std::vector<Var>& factors) : factors_(factors.begin(), factors.end()) {
    canonicalize();
  }

  const Storage& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  void canonicalize() { std::sort(factors_.begin(), factors_.end()); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.resize(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               out.factors_.begin());
    return out;
  }

  // The monomial with the factor at `pos` removed.
  Monomial without(std::size_t pos) const {
    Monomial out;
    out.factors_.reserve(factors_.size() - 1);
    for (std::size_t k = 0; k < factors_.size(); ++k)
      if (k != pos) out.factors_.push_back(factors_[k]);
    return out;
  }

  // The monomial with the factor at `pos` replaced by `v`.
  Monomial replaced(std::size_t pos, const Var& v) const {
    Monomial out = *this;
    out.factors_[pos] = v;
    // Only one element moved; a single insertion pass restores order.
    std::size_t k = pos;
    while (k > 0 && out.factors_[k] < out.factors_[k - 1]) {
      std::swap(out.factors_[k], out.factors_[k - 1]);
      --k;
    }
    while (k + 1 < out.factors_.size() && out.factors_[k + 1] < out.factors_[k]) {
      std::swap(out.factors_[k], out.factors_[k + 1]);
      ++k;
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull ^ factors_.size();
    for (const Var& v : factors_) h = (h ^ v.hash()) * 0x100000001b3ull;
    return h;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

 private:
  Storage factors_;
};

template <class Var>
struct MonomialHash {
  std::size_t operator()(const Monomial<Var>& m) const { return m.hash(); }
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted by
// monomial with no zero coefficients, so structural equality is value
// equality and iteration order is deterministic.
template <class Var>
class Polynomial {
 public:
  using Mono = Monomial<Var>;
  using Term = std::pair<Mono, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace_back(Mono{}, c);
  }
  explicit Polynomial(const Var& v) { terms_.emplace_back(Mono{v}, Rational(1)); }
  Polynomial(const Mono& m, const Rational& c) {
    if (c != 0) terms_.emplace_back(m, c);
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& o) { return merge(o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return merge(o, -1); }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    typename Polynomial::Accumulator acc;
    acc.add_product(a, b, Rational(1));
    return acc.finish();
  }

  // Hash-based builder for sums of many products; finish() sorts and prunes.
  class Accumulator {
   public:
    void add(const Mono& m, const Rational& c) {
      if (c == 0) return;
      auto [it, inserted] = map_.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
    void add(Mono&& m, const Rational& c) {
      if (c == 0) return;
      auto [it, inserted] = map_.try_emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
    void add(const Polynomial& p, const Rational& scale = Rational(1)) {
      if (scale == 0) return;
      for (const auto& [m, c] : p.terms()) add(m, c * scale);
    }
    // acc += scale * prefix * p
    void add_shifted(const Mono& prefix, const Polynomial& p, const Rational& scale) {
      if (scale == 0) return;
      for (const auto& [m, c] : p.terms()) add(prefix * m, c * scale);
    }
    void add_product(const Polynomial& a, const Polynomial& b, const Rational& scale) {
      if (scale == 0) return;
      for (const auto& [ma, ca] : a.terms()) {
        Rational cs = ca * scale;
        for (const auto& [mb, cb] : b.terms()) add(ma * mb, cs * cb);
      }
    }
    std::size_t size() const { return map_.size(); }

    Polynomial finish() {
      Polynomial out;
      out.terms_.reserve(map_.size());
      for (auto& [m, c] : map_)
        if (c != 0) out.terms_.emplace_back(m, std::move(c));
      map_.clear();
      std::sort(out.terms_.begin(), out.terms_.end(),
                [](const Term& x, const Term& y) { return x.first < y.first; });
      return out;
    }

   private:
    std::unordered_map<Mono, Rational, MonomialHash<Var>> map_;
  };

  // Keep only the terms satisfying pred(monomial).
  template <class Pred>
  Polynomial filtered(Pred pred) const {
    Polynomial out;
    for (const auto& t : terms_)
      if (pred(t.first)) out.terms_.push_back(t);
    return out;
  }

  // Build from arbitrary (monomial, coefficient) pairs; duplicates are summed.
  static Polynomial from_terms(const std::vector<Term>& raw) {
    Accumulator acc;
    for (const auto& [m, c] : raw) acc.add(m, c);
    return acc.finish();
  }

 private:
  Polynomial& merge(const Polynomial& o, int sign) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
        ++b;
      } else {
        Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
        if (c != 0) out.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term> terms_;
};

// Apply a derivation D to p, given D on single symbols:
//   D(c * f1...fk) = c * sum_k (f1...fk / fk) * D(fk).
template <class Var, class OnSymbol>
Polynomial<Var> apply_derivation(const Polynomial<Var>& p, OnSymbol&& on_symbol) {
  typename Polynomial<Var>::Accumulator acc;
  for (const auto& [m, c] : p.terms()) {
    const auto& f = m.factors();
    for (std::size_t k = 0; k < f.size(); ++k) {
      // Equal factors are adjacent; handle a run once with its multiplicity.
      if (k > 0 && f[k] == f[k - 1]) continue;
      std::size_t mult = 1;
      while (k + mult < f.size() && f[k + mult] == f[k]) ++mult;
      const Polynomial<Var>& dv = on_symbol(f[k]);
      if (dv.is_zero()) continue;
      acc.add_shifted(m.without(k), dv, c * Rational(static_cast<long>(mult)));
    }
  }
  return acc.finish();
}

// Ring homomorphism fixing constants, defined by its values on symbols.
template <class Out, class Var, class OnSymbol>
Polynomial<Out> substitute(const Polynomial<Var>& p, OnSymbol&& on_symbol) {
  typename Polynomial<Out>::Accumulator acc;
  for (const auto& [m, c] : p.terms()) {
    Polynomial<Out> prod(c);
    for (const Var& v : m.factors()) {
      prod = prod * on_symbol(v);
      if (prod.is_zero()) break;
    }
    acc.add(prod);
  }
  return acc.finish();
}

template <class Var>
Polynomial<Var> power(const Polynomial<Var>& p, unsigned e) {
  Polynomial<Var> out(Rational(1));
  for (unsigned k = 0; k < e; ++k) out = out * p;
  return out;
}

}  // namespace gdh
