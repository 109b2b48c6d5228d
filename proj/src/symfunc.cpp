#include "ctq/symfunc.hpp"

#include "ctq/tableau.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ctq {

void SymFunc::add(const Partition &lambda, const BigInt &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms.erase(it);
  }
}

void TensorSymFunc::add(const std::vector<Partition> &key, const BigInt &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms.erase(it);
  }
}

TensorSymFunc &TensorSymFunc::operator+=(const TensorSymFunc &o) {
  if (o.is_zero())
    return *this;
  if (is_zero() && factor_degrees.empty())
    factor_degrees = o.factor_degrees, basis = o.basis;
  if (factor_degrees != o.factor_degrees || basis != o.basis)
    throw std::invalid_argument("tensor factors or bases differ");
  for (const auto &[key, c] : o.terms)
    add(key, c);
  return *this;
}

TensorSymFunc outer(const TensorSymFunc &a, const TensorSymFunc &b) {
  if (a.basis != b.basis)
    throw std::invalid_argument("bases differ");
  TensorSymFunc r;
  r.basis = a.basis;
  r.factor_degrees = a.factor_degrees;
  r.factor_degrees.insert(r.factor_degrees.end(), b.factor_degrees.begin(),
                          b.factor_degrees.end());
  for (const auto &[ka, ca] : a.terms)
    for (const auto &[kb, cb] : b.terms) {
      auto key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      r.add(key, ca * cb);
    }
  return r;
}

int KostkaMatrix::position(const Partition &p) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] == p)
      return static_cast<int>(i);
  throw std::out_of_range("partition not in the index");
}

KostkaMatrix kostka_matrix(int n) {
  KostkaMatrix m;
  m.index = enum_partitions(n);
  const auto sz = static_cast<Eigen::Index>(m.index.size());
  m.k = Matrix<BigInt>::Zero(sz, sz);
  for (Eigen::Index r = 0; r < sz; ++r)
    for (Eigen::Index c = r; c < sz; ++c)
      m.k(r, c) = kostka(m.index[r], WeakComposition(m.index[c].parts()));
  return m;
}

KostkaMatrix inv_kostka(int n) {
  KostkaMatrix k = kostka_matrix(n);
  const Eigen::Index sz = k.k.rows();
  KostkaMatrix inv;
  inv.index = k.index;
  inv.k = Matrix<BigInt>::Zero(sz, sz);
  // Back substitution on the unit upper triangular matrix, column by column.
  for (Eigen::Index c = 0; c < sz; ++c) {
    for (Eigen::Index r = c; r >= 0; --r) {
      BigInt v = r == c ? BigInt(1) : BigInt(0);
      for (Eigen::Index t = r + 1; t <= c; ++t)
        v -= k.k(r, t) * inv.k(t, c);
      inv.k(r, c) = v;
    }
  }
  return inv;
}

namespace {

const KostkaMatrix &cached(int n, bool inverse) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, KostkaMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, inverse});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(n, inverse),
                       inverse ? inv_kostka(n) : kostka_matrix(n))
             .first;
  return it->second;
}

SymFunc change_basis(const SymFunc &f, bool to_s) {
  if (f.basis != (to_s ? SymBasis::H : SymBasis::S))
    throw std::invalid_argument("symmetric function is in the other basis");
  const KostkaMatrix &m = cached(f.degree, !to_s);
  SymFunc r;
  r.basis = to_s ? SymBasis::S : SymBasis::H;
  r.degree = f.degree;
  for (const auto &[lambda, c] : f.terms) {
    int col = m.position(lambda);
    for (int row = 0; row <= col; ++row)
      r.add(m.index[row], c * m.k(row, col));
  }
  return r;
}

} // namespace

SymFunc h_to_s(const SymFunc &f) { return change_basis(f, true); }
SymFunc s_to_h(const SymFunc &f) { return change_basis(f, false); }

TensorSymFunc h_to_s(const TensorSymFunc &f) {
  if (f.basis != SymBasis::H)
    throw std::invalid_argument("tensor is not in the h basis");
  TensorSymFunc r;
  r.basis = SymBasis::S;
  r.factor_degrees = f.factor_degrees;
  for (const auto &[key, c] : f.terms) {
    std::vector<std::pair<std::vector<Partition>, BigInt>> acc{{{}, c}};
    for (std::size_t i = 0; i < key.size(); ++i) {
      SymFunc h;
      h.basis = SymBasis::H;
      h.degree = key[i].size();
      h.add(key[i], 1);
      SymFunc s = h_to_s(h);
      std::vector<std::pair<std::vector<Partition>, BigInt>> next;
      for (const auto &[prefix, pc] : acc)
        for (const auto &[lam, sc] : s.terms) {
          auto k2 = prefix;
          k2.push_back(lam);
          next.emplace_back(std::move(k2), pc * sc);
        }
      acc = std::move(next);
    }
    for (const auto &[k2, v] : acc)
      r.add(k2, v);
  }
  return r;
}

namespace {
BigInt basis_dimension(SymBasis b, const Partition &p) {
  if (b == SymBasis::S)
    return f_lambda(p);
  BigInt d = factorial(p.size());
  for (int v : p.parts())
    d /= factorial(v);
  return d;
}
} // namespace

BigInt dimension(const SymFunc &f) {
  BigInt d = 0;
  for (const auto &[p, c] : f.terms)
    d += c * basis_dimension(f.basis, p);
  return d;
}

BigInt dimension(const TensorSymFunc &f) {
  BigInt d = 0;
  for (const auto &[key, c] : f.terms) {
    BigInt t = c;
    for (const auto &p : key)
      t *= basis_dimension(f.basis, p);
    d += t;
  }
  return d;
}

std::string to_string(const SymFunc &f) {
  std::ostringstream os;
  const char *b = f.basis == SymBasis::H ? "h" : "s";
  bool first = true;
  for (const auto &[p, c] : f.terms) {
    os << (first ? "" : " + ") << c.str() << '*' << b << to_string(p);
    first = false;
  }
  if (first)
    os << '0';
  return os.str();
}

std::string to_string(const TensorSymFunc &f) {
  std::ostringstream os;
  const char *b = f.basis == SymBasis::H ? "h" : "s";
  bool first = true;
  for (const auto &[key, c] : f.terms) {
    os << (first ? "" : " + ") << c.str() << '*';
    for (std::size_t i = 0; i < key.size(); ++i)
      os << (i ? "(x)" : "") << b << to_string(key[i]);
    first = false;
  }
  if (first)
    os << '0';
  return os.str();
}

} // namespace ctq
