#include "ctq/matrix.hpp"

namespace ctq {

std::vector<NonnegMatrix> enum_contingency(const WeakComposition &alpha,
                                           const WeakComposition &beta) {
  std::vector<NonnegMatrix> out;
  for_each_contingency(alpha, beta,
                       [&](const NonnegMatrix &a) { out.push_back(a); });
  return out;
}

} // namespace ctq
