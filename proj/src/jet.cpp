#include "gdh/jet.hpp"

#include <algorithm>
#include <numeric>

#include "gdh/errors.hpp"

namespace gdh {

MultiDerivSymbol::MultiDerivSymbol(std::vector<int> indices) : indices_(std::move(indices)) {
  for (int i : indices_)
    if (i < 1) throw DomainError("derivative index must be positive");
  std::sort(indices_.begin(), indices_.end());
}

int MultiDerivSymbol::weight() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

unsigned weight_of(const JetMonomial& m) {
  unsigned w = 0;
  for (const auto& v : m.factors()) w += v.weight();
  return w;
}

bool is_homogeneous(const JetPolynomial& p, unsigned w) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [w](const auto& t) { return weight_of(t.first) == w; });
}

}  // namespace gdh
