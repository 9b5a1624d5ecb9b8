#include "gdh/rational.hpp"

#include <stdexcept>

namespace gdh {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational must be an object with num and den");
  mpz_class num(j.at("num").get<std::string>());
  mpz_class den(j.at("den").get<std::string>());
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  Rational q(num, den);
  q.canonicalize();
  if (q.get_den() != den) throw std::invalid_argument("rational not in lowest terms");
  return q;
}

}  // namespace gdh
