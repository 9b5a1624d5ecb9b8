#include "gdh/hierarchy.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "gdh/errors.hpp"

namespace gdh {

struct Hierarchy::Caches {
  std::shared_mutex mutex;
  std::map<std::tuple<int, unsigned, unsigned>, JetPolynomial> prolonged;
  std::map<std::pair<unsigned, unsigned>, JetPolynomial> eta_derivatives;
  std::map<std::pair<unsigned, unsigned>, JetPolynomial> tails;
  std::map<std::pair<unsigned, unsigned>, JetPolynomial> jets;
  std::map<std::pair<int, int>, std::vector<std::pair<ColumnMultiset, Rational>>> matrices;
  std::map<std::vector<int>, JetPolynomial> reduced;

  void clear() {
    std::unique_lock lock(mutex);
    prolonged.clear();
    eta_derivatives.clear();
    tails.clear();
    jets.clear();
    reduced.clear();
  }

  // Look up `key`; on a miss compute without holding the lock (compute may
  // recurse into other caches) and insert. std::map nodes are stable, so the
  // returned reference survives later inserts.
  template <class Map, class Key, class Compute>
  const typename Map::mapped_type& get(Map& map, const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex);
      if (auto it = map.find(key); it != map.end()) return it->second;
    }
    auto value = compute();
    std::unique_lock lock(mutex);
    return map.try_emplace(key, std::move(value)).first->second;
  }
};

namespace {

std::string pair_name(int i, int j) {
  return "d" + std::to_string(i) + " d" + std::to_string(j) + " v";
}

}  // namespace

Hierarchy::Hierarchy(int order) : n_(order), caches_(std::make_unique<Caches>()) {
  if (order != 0 && order < 2) throw DomainError("Gelfand-Dickey order must be >= 2");
  rests_.emplace(1, JetPolynomial{});  // eta_1 = d_1 v exactly
}

Hierarchy::Hierarchy(Hierarchy&&) noexcept = default;
Hierarchy& Hierarchy::operator=(Hierarchy&&) noexcept = default;
Hierarchy::~Hierarchy() = default;

void Hierarchy::build_to(int weight, Execution exec, int workers) {
  for (int w = built_weight_ + 1; w <= weight; ++w) build_stage(w, exec, workers);
}

void Hierarchy::build_stage(int w, Execution exec, int workers) {
  if (route_ == PairRoute::operator_series) {
    build_stage_series(w, exec, workers);
    return;
  }
  if (reduced() && w - n_ - 1 >= 1) {
    // 0 = d_n d_{r+1} v; its leading jet u_{n+r,1} enters only through the
    // single column (n+r; 1) of the P sum, with coefficient a*b/(n+r).
    const int r = w - n_ - 1;
    const int a = std::min(n_, r + 1);
    const int b = std::max(n_, r + 1);
    JetPolynomial rest = derive_pair_impl(a, b, static_cast<unsigned>(n_ + r));
    elims_[r] = rest * make_rational(-(n_ + r), a * b);
  }

  std::vector<std::pair<int, int>> keys;
  for (int i = 1; 2 * i <= w; ++i) keys.emplace_back(i, w - i);
  std::vector<JetPolynomial> results(keys.size());
  for_each_index(keys.size(), exec, workers, [&](std::size_t k) {
    const auto [i, j] = keys[k];
    results[k] = (i == 1) ? jet_normal(static_cast<unsigned>(j), 1)
                          : derive_pair_impl(i, j, std::nullopt);
  });
  for (std::size_t k = 0; k < keys.size(); ++k) pairs_[keys[k]] = std::move(results[k]);

  rests_[w] = eta_rest_from_stage(w, exec, workers);
  built_weight_ = w;
}

// Q_0 = 1, Q_m = (k + sum_a d eta_a k^{-a}) Q_{m-1} + d Q_{m-1}; in weight
// slices (weight w sits at k^{m-w}):
//   Q_m[w] = Q_{m-1}[w] + sum_a d eta_a Q_{m-1}[w-a-1] + d Q_{m-1}[w-1].
// d_i phi = sum_t B_i^t Q_{i-t} has no k^{i-w} part for 1 <= w <= i, which fixes
// B_i^w; its k^{-j} part is d_i eta_j.
namespace {

// sum_a d eta_a Q_{m-1}[w-a-1] + d Q_{m-1}[w-1], a < a_end
template <class EtaD>
JetPolynomial series_increment(const std::vector<JetPolynomial>& prev, int w, int a_end,
                               EtaD&& eta_d) {
  JetPolynomial::Accumulator acc;
  for (int a = 1; a < a_end; ++a) acc.add_product(eta_d(a), prev[w - a - 1], Rational(1));
  acc.add(d1_total(prev[w - 1]));
  return acc.finish();
}

}  // namespace

void Hierarchy::extend_series(int max_m, int weight, Execution exec, int workers) {
  if (q_.empty()) q_.emplace_back();
  while (static_cast<int>(q_[0].size()) <= weight)
    q_[0].push_back(q_[0].empty() ? JetPolynomial(Rational(1)) : JetPolynomial{});
  auto eta_d = [&](int a) -> const JetPolynomial& {
    return eta_derivative(static_cast<unsigned>(a), 1);
  };
  for (int m = 1; m <= max_m; ++m) {
    if (static_cast<int>(q_.size()) <= m) q_.emplace_back();
    auto& row = q_[m];
    const auto& prev = q_[m - 1];
    const int from = static_cast<int>(row.size());
    if (from > weight) continue;
    std::vector<JetPolynomial> inc(static_cast<std::size_t>(weight - from + 1));
    for_each_index(inc.size(), exec, workers, [&](std::size_t k) {
      const int w = from + static_cast<int>(k);
      if (w > 0) inc[k] = series_increment(prev, w, w, eta_d);
    });
    for (int w = from; w <= weight; ++w) row.push_back(prev[w] + inc[w - from]);
  }
}

void Hierarchy::series_top(int max_m, int w, Execution exec, int workers) {
  std::vector<JetPolynomial> inc(static_cast<std::size_t>(max_m) + 1);
  for_each_index(inc.size() - 1, exec, workers, [&](std::size_t k) {
    inc[k + 1] = series_increment(q_[k], w, w - 1, [&](int a) -> const JetPolynomial& {
      return eta_derivative(static_cast<unsigned>(a), 1);
    });
  });
  q_top_.assign(inc.size(), JetPolynomial{});
  for (int m = 1; m <= max_m; ++m) q_top_[m] = q_top_[m - 1] + inc[m];
}

const std::vector<JetPolynomial>& Hierarchy::flow_b(int flow) {
  auto [it, inserted] = b_.try_emplace(flow);
  auto& b = it->second;
  if (inserted) {
    b.resize(static_cast<std::size_t>(flow) + 1);
    b[0] = JetPolynomial(Rational(1));
    for (int w = 2; w <= flow; ++w) {
      JetPolynomial::Accumulator acc;
      for (int t = 0; t < w; ++t)
        if (t != 1) acc.add_product(b[t], q_[flow - t][w - t], Rational(-1));
      b[w] = acc.finish();
    }
  }
  return b;
}

// d_i eta_j with i + j = w, once the weight-w slices are complete.
JetPolynomial Hierarchy::series_ds_eta(int flow, int w) const {
  const auto& b = b_.at(flow);
  JetPolynomial::Accumulator acc;
  for (int t = 0; t <= flow; ++t)
    if (t != 1) acc.add_product(b[t], q_[flow - t][w - t], Rational(1));
  return acc.finish();
}

void Hierarchy::build_stage_series(int w, Execution exec, int workers) {
  const int max_flow = w / 2;
  extend_series(max_flow, w - 1, exec, workers);
  for (int i = 2; i <= max_flow; ++i) flow_b(i);
  series_top(max_flow, w, exec, workers);

  if (reduced() && w - n_ - 1 >= 1) {
    // d eta_{n+r} contributes m (1/(n+r)) u_{n+r,1} to Q_m[w]; every other
    // piece of 0 = d_a eta_b - d_a R_b is already in normal form.
    const int r = w - n_ - 1;
    const int a = std::min(n_, r + 1);
    const int b = std::max(n_, r + 1);
    const auto& bs = b_.at(a);
    JetPolynomial::Accumulator acc;
    acc.add(q_top_[a]);
    acc.add(eta_derivative_tail(static_cast<unsigned>(n_ + r), 1), Rational(a));
    for (int t = 2; t <= a; ++t) acc.add_product(bs[t], q_[a - t][w - t], Rational(1));
    JetPolynomial rest = acc.finish();
    rest -= partial(a, eta_rest(b));
    elims_[r] = rest * make_rational(-(n_ + r), a);
  }

  {
    const auto& head = eta_derivative(static_cast<unsigned>(w - 1), 1);
    q_[0].push_back(JetPolynomial{});
    for (int m = 1; m <= max_flow; ++m) q_[m].push_back(q_top_[m] + head * Rational(m));
    q_top_.clear();
  }

  std::vector<std::pair<int, int>> keys;
  for (int i = 1; 2 * i <= w; ++i) keys.emplace_back(i, w - i);
  std::vector<JetPolynomial> results(keys.size());
  std::vector<JetPolynomial> ds(keys.size());  // d_i eta_j, reused for eta_w
  for_each_index(keys.size(), exec, workers, [&](std::size_t k) {
    const auto [i, j] = keys[k];
    if (i == 1) {
      results[k] = jet_normal(static_cast<unsigned>(j), 1);
      return;
    }
    ds[k] = series_ds_eta(i, w);
    results[k] = (ds[k] - partial(i, eta_rest(j))) * Rational(j);
  });
  for (std::size_t k = 0; k < keys.size(); ++k) pairs_[keys[k]] = std::move(results[k]);

  // eta_w as in eta_rest_from_stage, with d_i eta_{w-i} (2 <= i <= w/2) taken
  // from the series instead of recomputed.
  std::vector<JetPolynomial> parts(static_cast<std::size_t>(w - 1));
  for_each_index(parts.size(), exec, workers, [&](std::size_t k) {
    const int i = static_cast<int>(k) + 1;
    if (i >= 2 && 2 * i <= w) {
      parts[k] = std::move(ds[static_cast<std::size_t>(i - 1)]);
    } else {
      parts[k] = pair(i, w - i) * Rational(1, w - i) + partial(i, eta_rest(w - i));
    }
  });
  JetPolynomial::Accumulator acc;
  for (const auto& p : parts) acc.add(p, Rational(-1, w));
  rests_[w] = acc.finish();
  built_weight_ = w;
}

// eta_w = (1/w) (d_w v - sum_{i<w} d_i eta_{w-i}), from k d/dk of
// exp(-sum_i k^{-i} d_i / i) v; each d_i eta_{w-i} is read off the stored
// pair plus d_i of the lower remainder.
JetPolynomial Hierarchy::eta_rest_from_stage(int w, Execution exec, int workers) const {
  std::vector<JetPolynomial> parts(static_cast<std::size_t>(w - 1));
  for_each_index(parts.size(), exec, workers, [&](std::size_t k) {
    const int i = static_cast<int>(k) + 1;
    parts[k] = pair(i, w - i) * Rational(1, w - i) + partial(i, eta_rest(w - i));
  });
  JetPolynomial::Accumulator acc;
  for (const auto& p : parts) acc.add(p, Rational(-1, w));
  return acc.finish();
}

JetPolynomial Hierarchy::derive_pair_impl(int i, int j,
                                          std::optional<unsigned> symbolic_head) const {
  JetPolynomial::Accumulator acc;
  for (const auto& [ms, c] : matrix_terms(i, i + j)) {
    JetPolynomial prod(c);
    for (const auto& col : ms.columns()) {
      const auto s = static_cast<unsigned>(col.i);
      const auto t = static_cast<unsigned>(col.j);
      if (symbolic_head && s == *symbolic_head && t == 1) {
        prod = prod * eta_derivative_tail(s, t);
      } else {
        prod = prod * eta_derivative(s, t);
      }
      if (prod.is_zero()) break;
    }
    acc.add(prod);
  }
  JetPolynomial out = acc.finish();
  out -= partial(i, eta_rest(j));
  out *= Rational(j);
  return out;
}

JetPolynomial Hierarchy::derive_pair(int i, int j) const {
  if (i < 1 || j < 1) throw DomainError("pair indices must be >= 1");
  return derive_pair_impl(i, j, std::nullopt);
}

const std::vector<std::pair<ColumnMultiset, Rational>>& Hierarchy::matrix_terms(int flow,
                                                                               int total) const {
  return caches_->get(caches_->matrices, std::pair{flow, total}, [&] {
    std::vector<std::pair<ColumnMultiset, Rational>> out;
    for (auto& ms : column_multisets(total, flow)) {
      Rational c = p_coeff_sym(flow, ms);
      if (c != 0) out.emplace_back(std::move(ms), std::move(c));
    }
    return out;
  });
}

const JetPolynomial& Hierarchy::eta_derivative(unsigned s, unsigned t) const {
  return caches_->get(caches_->eta_derivatives, std::pair{s, t}, [&] {
    return jet_normal(s, t) * Rational(1, s) + eta_derivative_tail(s, t);
  });
}

JetPolynomial Hierarchy::eta_derivative_tail(unsigned s, unsigned t) const {
  if (t == 0) return eta_rest(static_cast<int>(s));
  return caches_->get(caches_->tails, std::pair{s, t},
                      [&] { return d1_total(eta_derivative_tail(s, t - 1)); });
}

const JetPolynomial& Hierarchy::prolonged_pair(int i, unsigned s, unsigned t) const {
  if (t == 0) return pair(i, static_cast<int>(s));
  return caches_->get(caches_->prolonged, std::tuple{i, s, t},
                      [&] { return d1_total(prolonged_pair(i, s, t - 1)); });
}

const JetPolynomial& Hierarchy::jet_cached(unsigned s, unsigned t) const {
  return caches_->get(caches_->jets, std::pair{s, t}, [&] {
    // s > n, t >= 1: u_{s,t} = d1^{t-1} of the rule for u_{s,1}.
    if (t == 1) return elimination(static_cast<int>(s) - n_);
    return d1_total(jet_cached(s, t - 1));
  });
}

JetPolynomial Hierarchy::jet_normal(unsigned s, unsigned t) const {
  if (s < 1) throw DomainError("jet flow index must be >= 1");
  if (!reduced() || s < static_cast<unsigned>(n_)) return jet(s, t);
  if (t == 0)
    throw DomainError("d" + std::to_string(s) + " v has no normal form in the " +
                      std::to_string(n_) + "-reduction (flow index >= n)");
  if (s == static_cast<unsigned>(n_)) return {};
  return jet_cached(s, t);
}

JetPolynomial Hierarchy::normalize(const JetPolynomial& p) const {
  if (!reduced()) return p;
  return substitute<JetVariable>(p, [&](const JetVariable& v) { return jet_normal(v.s, v.t); });
}

JetPolynomial Hierarchy::partial(int i, const JetPolynomial& p) const {
  if (i < 1) throw DomainError("flow index must be >= 1");
  return apply_derivation(p, [&](const JetVariable& v) -> const JetPolynomial& {
    return prolonged_pair(i, v.s, v.t);
  });
}

const JetPolynomial& Hierarchy::pair(int i, int j) const {
  if (i < 1 || j < 1) throw DomainError("pair indices must be >= 1");
  auto it = pairs_.find({std::min(i, j), std::max(i, j)});
  if (it == pairs_.end())
    throw MissingTable("equation for " + pair_name(i, j) + " not built (built weight " +
                       std::to_string(built_weight_) + ")");
  return it->second;
}

const JetPolynomial& Hierarchy::eta_rest(int r) const {
  auto it = rests_.find(r);
  if (it == rests_.end())
    throw MissingTable("eta_" + std::to_string(r) + " not built (built weight " +
                       std::to_string(built_weight_) + ")");
  return it->second;
}

const JetPolynomial& Hierarchy::elimination(int r) const {
  if (!reduced()) throw DomainError("elimination rules exist only for reduced hierarchies");
  if (r < 1) throw DomainError("elimination rule index must be >= 1");
  auto it = elims_.find(r);
  if (it == elims_.end())
    throw MissingTable("elimination rule for u_{" + std::to_string(n_ + r) + ",1} not built");
  return it->second;
}

const JetPolynomial& Hierarchy::reduce(const MultiDerivSymbol& sym) const {
  const auto& idx = sym.indices();
  if (idx.empty()) throw DomainError("empty derivative multiset");
  if (idx.size() == 2) return pair(idx[0], idx[1]);
  return caches_->get(caches_->reduced, idx, [&] {
    if (idx.size() == 1) return jet_normal(static_cast<unsigned>(idx[0]), 0);
    std::vector<int> head(idx.begin(), idx.end() - 1);
    return partial(idx.back(), reduce(MultiDerivSymbol(head)));
  });
}

JetPolynomial Hierarchy::reduce_in_order(const std::vector<int>& order) const {
  if (order.empty()) throw DomainError("empty derivative sequence");
  if (order.size() == 1) return jet_normal(static_cast<unsigned>(order[0]), 0);
  JetPolynomial p = pair(order[0], order[1]);
  for (std::size_t k = 2; k < order.size(); ++k) p = partial(order[k], p);
  return p;
}

void Hierarchy::restore(int weight, std::map<std::pair<int, int>, JetPolynomial> pairs,
                        std::map<int, JetPolynomial> rests, std::map<int, JetPolynomial> elims) {
  pairs_ = std::move(pairs);
  rests_ = std::move(rests);
  elims_ = std::move(elims);
  rests_.try_emplace(1, JetPolynomial{});
  built_weight_ = weight;
  caches_->clear();
  q_.clear();
  b_.clear();
  for (int w = 2; w <= weight; ++w) {
    if (!rests_.count(w)) throw MissingTable("restored table lacks eta_" + std::to_string(w));
    for (int i = 1; 2 * i <= w; ++i)
      if (!pairs_.count({i, w - i}))
        throw MissingTable("restored table lacks " + pair_name(i, w - i));
    if (reduced() && w - n_ - 1 >= 1 && !elims_.count(w - n_ - 1))
      throw MissingTable("restored table lacks an elimination rule");
  }
}

void Hierarchy::validate() const {
  const unsigned max_s = reduced() ? static_cast<unsigned>(n_ - 1) : ~0u;
  auto check = [&](const JetPolynomial& p, unsigned w, bool parity, const std::string& what) {
    for (const auto& [m, c] : p.terms()) {
      if (weight_of(m) != w) throw InvariantViolation(what + ": monomial of wrong weight");
      unsigned parity_sum = 0;
      for (const auto& v : m.factors()) {
        if (v.t < 1) throw InvariantViolation(what + ": factor with t = 0");
        if (v.s > max_s) throw InvariantViolation(what + ": factor outside the reduction");
        parity_sum += v.t + 1;
      }
      if (parity && parity_sum % 2 != 0)
        throw InvariantViolation(what + ": monomial with odd sum of (t + 1)");
    }
  };
  for (const auto& [key, p] : pairs_)
    check(p, static_cast<unsigned>(key.first + key.second), true, pair_name(key.first, key.second));
  for (const auto& [r, p] : rests_) check(p, static_cast<unsigned>(r), false, "eta remainder");
  for (const auto& [r, p] : elims_)
    check(p, static_cast<unsigned>(n_ + r + 1), true, "elimination rule");
}

}  // namespace gdh
