#include "ctq/tableau.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace ctq {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty())
    rows_.pop_back();
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto &r : rows_)
    p.push_back(static_cast<int>(r.size()));
  return Partition(p);
}

WeakComposition Tableau::content(std::size_t length) const {
  std::vector<int> c(length, 0);
  for (const auto &r : rows_)
    for (int v : r) {
      if (v < 1 || static_cast<std::size_t>(v) > length)
        throw std::out_of_range("tableau entry outside content range");
      ++c[v - 1];
    }
  return WeakComposition(c);
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0 && rows_[i].size() > rows_[i - 1].size())
      return false;
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1)
        return false;
      if (j > 0 && rows_[i][j] < rows_[i][j - 1])
        return false;
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j])
        return false;
    }
  }
  return true;
}

namespace {

// Fills parts[i] in [lo_i, hi_i] with total `size` of (hi_i - parts[i]) for
// removal, or (parts[i] - lo_i) for addition.
void strips_rec(std::size_t i, int left, const std::vector<int> &lo,
                const std::vector<int> &hi, bool removing,
                std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (i == lo.size()) {
    if (left == 0)
      out.push_back(cur);
    return;
  }
  int span = hi[i] - lo[i];
  for (int t = std::min(span, left); t >= 0; --t) {
    cur[i] = removing ? hi[i] - t : lo[i] + t;
    strips_rec(i + 1, left - t, lo, hi, removing, cur, out);
  }
}

// Partitions nu with mu <= nu <= bound and nu/mu a horizontal strip.
std::vector<std::vector<int>> add_strips_bounded(const std::vector<int> &mu,
                                                 int size,
                                                 const std::vector<int> &bound) {
  std::size_t rows = bound.size();
  std::vector<int> lo(rows), hi(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    lo[i] = i < mu.size() ? mu[i] : 0;
    int above = i == 0 ? bound[0] : (i - 1 < mu.size() ? mu[i - 1] : 0);
    hi[i] = std::min(bound[i], above);
    if (hi[i] < lo[i])
      hi[i] = lo[i];
  }
  std::vector<int> cur(rows);
  std::vector<std::vector<int>> out;
  strips_rec(0, size, lo, hi, false, cur, out);
  for (auto &v : out)
    std::erase(v, 0);
  return out;
}

} // namespace

std::vector<Partition> remove_horizontal_strips(const Partition &lambda,
                                                int size) {
  std::size_t rows = lambda.length();
  std::vector<int> lo(rows), hi(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    hi[i] = lambda[i];
    lo[i] = lambda.part(i + 1);
  }
  std::vector<int> cur(rows);
  std::vector<std::vector<int>> raw;
  strips_rec(0, size, lo, hi, true, cur, raw);
  std::vector<Partition> out;
  for (auto &v : raw)
    out.push_back(Partition::from_unsorted(v));
  return out;
}

std::vector<Partition> add_horizontal_strips(const Partition &mu, int size,
                                             int max_rows) {
  std::size_t rows = mu.length() + 1;
  if (max_rows >= 0)
    rows = std::min<std::size_t>(rows, max_rows);
  std::vector<int> bound(rows, mu.size() + size);
  std::vector<Partition> out;
  for (auto &v : add_strips_bounded(mu.parts(), size, bound))
    out.emplace_back(v);
  return out;
}

std::vector<Tableau> enum_ssyt(const Partition &lambda,
                               const WeakComposition &alpha) {
  std::vector<Tableau> out;
  if (lambda.size() != alpha.sum())
    return out;
  std::vector<std::vector<int>> fill(lambda.length());
  auto rec = [&](auto &self, std::size_t v, const std::vector<int> &mu) {
    if (v == alpha.length()) {
      if (mu == lambda.parts())
        out.emplace_back(fill);
      return;
    }
    for (const auto &nu : add_strips_bounded(mu, alpha[v], lambda.parts())) {
      for (std::size_t r = 0; r < nu.size(); ++r) {
        int old = r < mu.size() ? mu[r] : 0;
        fill[r].insert(fill[r].end(), nu[r] - old, static_cast<int>(v) + 1);
      }
      self(self, v + 1, nu);
      for (std::size_t r = 0; r < nu.size(); ++r) {
        int old = r < mu.size() ? mu[r] : 0;
        fill[r].resize(old);
      }
    }
  };
  rec(rec, 0, {});
  return out;
}

BigInt KostkaTable::operator()(const Partition &lambda,
                               const WeakComposition &alpha) {
  if (lambda.size() != alpha.sum())
    return 0;
  return count(lambda, alpha.parts(), alpha.length());
}

BigInt KostkaTable::count(const Partition &lambda,
                          const std::vector<int> &alpha, std::size_t len) {
  if (len == 0)
    return lambda.empty() ? 1 : 0;
  if (lambda.length() > len)
    return 0;
  if (len == 1)
    return lambda.length() <= 1 ? 1 : 0;
  std::vector<int> prefix(alpha.begin(), alpha.begin() + len);
  auto key = std::make_pair(lambda.parts(), prefix);
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;
  BigInt total = 0;
  for (const auto &mu : remove_horizontal_strips(lambda, alpha[len - 1]))
    total += count(mu, alpha, len - 1);
  memo_.emplace(std::move(key), total);
  return total;
}

std::string KostkaTable::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["kind"] = "kostka-memo";
  auto &entries = j["entries"] = nlohmann::json::array();
  for (const auto &[key, value] : memo_)
    entries.push_back({{"shape", key.first},
                       {"content", key.second},
                       {"value", value.str()}});
  return j.dump();
}

void KostkaTable::merge_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  if (j.value("version", 0) != 1 || j.value("kind", "") != "kostka-memo")
    throw std::runtime_error("unsupported Kostka cache format");
  for (const auto &e : j.at("entries")) {
    auto shape = e.at("shape").get<std::vector<int>>();
    auto content = e.at("content").get<std::vector<int>>();
    memo_.emplace(std::make_pair(shape, content),
                  BigInt(e.at("value").get<std::string>()));
  }
}

KostkaTable &thread_kostka_table() {
  thread_local KostkaTable table;
  return table;
}

BigInt kostka(const Partition &lambda, const WeakComposition &alpha) {
  return thread_kostka_table()(lambda, alpha);
}

BigInt f_lambda(const Partition &lambda) {
  BigInt hooks = 1;
  Partition c = lambda.conjugate();
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= (lambda[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

} // namespace ctq
