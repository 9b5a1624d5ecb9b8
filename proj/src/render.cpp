#include "gdh/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gdh {

namespace {

struct Style {
  std::function<std::string(const JetVariable&)> jet;
  std::function<std::string(const Rational&)> coeff;  // positive values only
  std::string open, close;
  std::function<std::string(int)> power;
};

std::string frac_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string jet_text(const JetVariable& v) {
  if (v.s == 1) return v.t == 0 ? "d1 v" : "d1^" + std::to_string(v.t + 1) + " v";
  std::string out = "d" + std::to_string(v.s);
  if (v.t == 1) out += " d1";
  if (v.t > 1) out += " d1^" + std::to_string(v.t);
  return out + " v";
}

std::string jet_latex(const JetVariable& v) {
  if (v.s == 1) return v.t == 0 ? "\\partial v" : "\\partial^{" + std::to_string(v.t + 1) + "} v";
  std::string out = "\\partial_{" + std::to_string(v.s) + "}";
  if (v.t == 1) out += "\\partial";
  if (v.t > 1) out += "\\partial^{" + std::to_string(v.t) + "}";
  return out + " v";
}

const Style& text_style() {
  static const Style s{jet_text, [](const Rational& q) { return to_string(q); }, "(", ")",
                       [](int e) { return "^" + std::to_string(e); }};
  return s;
}

const Style& latex_style() {
  static const Style s{jet_latex, frac_latex, "\\left(", "\\right)",
                       [](int e) { return "^{" + std::to_string(e) + "}"; }};
  return s;
}

std::string render_monomial(const JetMonomial& m, const Style& style) {
  // Factors largest first, equal factors collected into a power.
  std::vector<JetVariable> f(m.factors().rbegin(), m.factors().rend());
  const bool single = f.size() == 1;
  std::string out;
  for (std::size_t k = 0; k < f.size();) {
    std::size_t run = 1;
    while (k + run < f.size() && f[k + run] == f[k]) ++run;
    if (!out.empty()) out += " ";
    if (single) {
      out += style.jet(f[k]);
    } else {
      out += style.open + style.jet(f[k]) + style.close;
      if (run > 1) out += style.power(static_cast<int>(run));
    }
    k += run;
  }
  return out;
}

std::string render(const JetPolynomial& p, const Style& style) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : display_order(p)) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty()) {
      out += style.coeff(mag);
      continue;
    }
    if (mag != 1) out += style.coeff(mag) + " ";
    out += render_monomial(m, style);
  }
  return out;
}

std::string lhs(std::vector<int> indices, const std::string& prefix, bool latex) {
  std::sort(indices.rbegin(), indices.rend());
  std::string out;
  for (std::size_t k = 0; k < indices.size();) {
    std::size_t run = 1;
    while (k + run < indices.size() && indices[k + run] == indices[k]) ++run;
    if (!out.empty() && !latex) out += " ";
    const std::string i = std::to_string(indices[k]);
    out += latex ? prefix + "_{" + i + "}" : prefix + i;
    if (run > 1) out += latex ? "^{" + std::to_string(run) + "}" : "^" + std::to_string(run);
    k += run;
  }
  return out + " v";
}

std::vector<std::pair<GradedSeries::Key, Rational>> series_order(const GradedSeries& s) {
  std::vector<std::pair<GradedSeries::Key, Rational>> terms(s.terms().begin(), s.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.size() < b.first.size();
  });
  return terms;
}

std::string render_series(const GradedSeries& s, bool latex) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : series_order(s)) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t k = 0; k < key.size();) {
      std::size_t run = 1;
      while (k + run < key.size() && key[k + run] == key[k]) ++run;
      if (!mono.empty()) mono += " ";
      mono += latex ? "x_{" + std::to_string(key[k]) + "}" : "x" + std::to_string(key[k]);
      if (run > 1) mono += latex ? "^{" + std::to_string(run) + "}" : "^" + std::to_string(run);
      k += run;
    }
    if (mono.empty()) {
      out += latex ? frac_latex(mag) : to_string(mag);
    } else {
      if (mag != 1) out += (latex ? frac_latex(mag) : to_string(mag)) + " ";
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::vector<JetPolynomial::Term> display_order(const JetPolynomial& p) {
  std::vector<JetPolynomial::Term> terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto& fa = a.first.factors();
    const auto& fb = b.first.factors();
    if (fa.size() != fb.size()) return fa.size() < fb.size();
    return std::lexicographical_compare(fb.rbegin(), fb.rend(), fa.rbegin(), fa.rend());
  });
  return terms;
}

std::string render_text(const JetPolynomial& p) { return render(p, text_style()); }
std::string render_latex(const JetPolynomial& p) { return render(p, latex_style()); }

std::string lhs_text(std::vector<int> indices) { return lhs(std::move(indices), "d", false); }
std::string lhs_latex(std::vector<int> indices) {
  return lhs(std::move(indices), "\\partial", true);
}

nlohmann::json monomial_json(const JetMonomial& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : m.factors()) out.push_back({v.s, v.t});
  return out;
}

JetMonomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("monomial must be an array of [s, t] pairs");
  std::vector<JetVariable> f;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("bad jet variable");
    const long s = pair.at(0).get<long>();
    const long t = pair.at(1).get<long>();
    if (s < 1 || t < 0) throw std::invalid_argument("jet variable needs s >= 1, t >= 0");
    f.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
  }
  if (!std::is_sorted(f.begin(), f.end()))
    throw std::invalid_argument("monomial factors not in canonical order");
  return JetMonomial(f);
}

nlohmann::json polynomial_json(const JetPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"monomial", monomial_json(m)}, {"coeff", to_json(c)}});
  return out;
}

JetPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  std::vector<JetPolynomial::Term> raw;
  for (const auto& t : j) {
    Rational c = rational_from_json(t.at("coeff"));
    if (c == 0) throw std::invalid_argument("stored coefficient is zero");
    raw.emplace_back(monomial_from_json(t.at("monomial")), std::move(c));
  }
  JetPolynomial p = JetPolynomial::from_terms(raw);
  if (p.size() != raw.size()) throw std::invalid_argument("duplicate monomials in polynomial");
  return p;
}

nlohmann::json equation_terms_json(const JetPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : display_order(p))
    out.push_back({{"monomial", monomial_json(m)}, {"coeff", to_json(c)}});
  return out;
}

std::string render_series_text(const GradedSeries& s) { return render_series(s, false); }
std::string render_series_latex(const GradedSeries& s) { return render_series(s, true); }

nlohmann::json series_json(const GradedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : series_order(s))
    terms.push_back({{"indices", key}, {"coeff", to_json(c)}});
  nlohmann::json out{{"n", s.n()}, {"terms", terms}};
  if (s.genus_tag()) out["genus"] = *s.genus_tag();
  return out;
}

}  // namespace gdh
