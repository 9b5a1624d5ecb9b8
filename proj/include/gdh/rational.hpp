#pragma once

#include <gmpxx.h>

#include <string>

#include <nlohmann/json.hpp>

namespace gdh {

// Exact rationals everywhere; mpq_class keeps values in lowest terms with a
// positive denominator as long as every constructed value is canonicalized.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// {"num": "<decimal>", "den": "<decimal>"}; den > 0, lowest terms.
nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace gdh
