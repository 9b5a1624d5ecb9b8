#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gdh/jet.hpp"
#include "gdh/witten.hpp"

namespace gdh {

enum class Format { text, latex, json };

// Display order: fewer factors first; within a factor count, monomials whose
// factor lists (largest factor first) compare higher come first.
std::vector<JetPolynomial::Term> display_order(const JetPolynomial& p);

// "4/3 d3 d1 v - 1/3 d1^4 v + 2 (d1^2 v)^2"; "0" for the zero polynomial.
std::string render_text(const JetPolynomial& p);
std::string render_latex(const JetPolynomial& p);

// d_{i1}..d_{ik} v, largest index first: "d3 d2 v", "d2^2 v".
std::string lhs_text(std::vector<int> indices);
std::string lhs_latex(std::vector<int> indices);

// Monomial as [[s, t], ...] in canonical (ascending) order.
nlohmann::json monomial_json(const JetMonomial& m);
JetMonomial monomial_from_json(const nlohmann::json& j);

// Canonical storage form, for the cache: [{"monomial": .., "coeff": ..}, ...]
// in ascending monomial order.
nlohmann::json polynomial_json(const JetPolynomial& p);
JetPolynomial polynomial_from_json(const nlohmann::json& j);

// Display form: same records in display order.
nlohmann::json equation_terms_json(const JetPolynomial& p);

// Series in x: "1/6 x1^3 - 1/2 x1^3 x3", terms ordered by factor count, then key.
std::string render_series_text(const GradedSeries& s);
std::string render_series_latex(const GradedSeries& s);
nlohmann::json series_json(const GradedSeries& s);

}  // namespace gdh
