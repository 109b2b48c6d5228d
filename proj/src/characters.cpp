#include "ctq/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctq {

namespace {

BigInt mn_rec(const std::vector<int> &lambda, const std::vector<int> &rho,
              std::size_t at,
              std::map<std::pair<std::vector<int>, std::size_t>, BigInt> &memo) {
  if (at == rho.size())
    return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, at);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  const int len = static_cast<int>(lambda.size());
  const int r = rho[at];
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i)
    beta[i] = lambda[i] + (len - 1 - i);
  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
      continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i])
        ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> mu;
    for (int t = 0; t < len; ++t)
      if (int v = nb[t] - (len - 1 - t); v > 0)
        mu.push_back(v);
    BigInt sub = mn_rec(mu, rho, at + 1, memo);
    total += between % 2 ? -sub : sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

} // namespace

BigInt mn_character(const Partition &lambda, const Partition &rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character arguments have different sizes");
  thread_local std::map<std::vector<int>,
                        std::map<std::pair<std::vector<int>, std::size_t>, BigInt>>
      memos;
  return mn_rec(lambda.parts(), rho.parts(), 0, memos[rho.parts()]);
}

BigInt centralizer_size(const Partition &rho) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) {
    z *= p;
    ++mult[p];
  }
  for (auto [p, m] : mult)
    z *= factorial(m);
  return z;
}

std::vector<ProductClass> product_classes(const std::vector<int> &degrees) {
  std::vector<ProductClass> out{{}};
  for (int d : degrees) {
    std::vector<ProductClass> next;
    for (const auto &prefix : out)
      for (const auto &p : enum_partitions(d)) {
        auto c = prefix;
        c.push_back(p);
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

BigInt character_value(const TensorSymFunc &f, const ProductClass &c) {
  if (f.basis != SymBasis::S)
    throw std::invalid_argument("characters need the Schur basis");
  BigInt v = 0;
  for (const auto &[key, coef] : f.terms) {
    BigInt t = coef;
    for (std::size_t i = 0; i < key.size() && t != 0; ++i)
      t *= mn_character(key[i], c[i]);
    v += t;
  }
  return v;
}

TensorSymFunc decompose_class_function(const std::vector<int> &degrees,
                                       const std::map<ProductClass, BigInt> &chi) {
  TensorSymFunc r;
  r.basis = SymBasis::S;
  r.factor_degrees = degrees;
  // Irreducibles are labelled by the same tuples as the classes.
  for (const auto &tau : product_classes(degrees)) {
    Rational m = 0;
    for (const auto &[c, v] : chi) {
      if (v == 0)
        continue;
      BigInt irr = 1;
      BigInt z = 1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        irr *= mn_character(tau[i], c[i]);
        z *= centralizer_size(c[i]);
      }
      m += Rational(v * irr) / Rational(z);
    }
    if (denominator(m) != 1 || m < 0)
      throw std::runtime_error("class function is not a character");
    r.add(tau, numerator(m));
  }
  return r;
}

namespace {
void require_same_group(const TensorSymFunc &a, const TensorSymFunc &b) {
  if (!a.is_zero() && !b.is_zero() && a.factor_degrees != b.factor_degrees)
    throw std::invalid_argument("modules for different groups");
}

std::vector<int> degrees_of(const TensorSymFunc &a, const TensorSymFunc &b) {
  return a.factor_degrees.empty() ? b.factor_degrees : a.factor_degrees;
}
} // namespace

TensorSymFunc kronecker_product(const TensorSymFunc &a,
                                const TensorSymFunc &b) {
  require_same_group(a, b);
  auto degrees = degrees_of(a, b);
  std::map<ProductClass, BigInt> chi;
  for (const auto &c : product_classes(degrees))
    chi[c] = character_value(a, c) * character_value(b, c);
  return decompose_class_function(degrees, chi);
}

bool kronecker_dominance(const TensorSymFunc &a, const TensorSymFunc &b) {
  require_same_group(a, b);
  if (b.is_zero())
    return true;
  TensorSymFunc sq = kronecker_product(a, a);
  for (const auto &[key, c] : b.terms) {
    auto it = sq.terms.find(key);
    BigInt have = it == sq.terms.end() ? BigInt(0) : it->second;
    if (have < c)
      return false;
  }
  return true;
}

} // namespace ctq
