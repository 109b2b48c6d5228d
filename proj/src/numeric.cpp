#include "ctq/numeric.hpp"

#include <stdexcept>

namespace ctq {

BigInt factorial(int n) {
  if (n < 0)
    throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void trim(QPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

QPoly add(const QPoly &a, const QPoly &b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  trim(r);
  return r;
}

QPoly multiply(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty())
    return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

BigInt evaluate_at_one(const QPoly &p) {
  BigInt r = 0;
  for (const auto &c : p)
    r += c;
  return r;
}

} // namespace ctq
