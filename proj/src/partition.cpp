#include "ctq/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ctq {

WeakComposition::WeakComposition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0)
      throw std::invalid_argument("composition part is negative");
    sum_ += p;
  }
}

bool WeakComposition::has_zero() const {
  return std::find(parts_.begin(), parts_.end(), 0) != parts_.end();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition part is not positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts are not decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j)
      ++c[j];
  return Partition(std::move(c));
}

bool Partition::dominates(const Partition &other) const {
  if (size_ != other.size_)
    return false;
  int a = 0, b = 0;
  std::size_t len = std::max(length(), other.length());
  for (std::size_t i = 0; i < len; ++i) {
    a += part(i);
    b += other.part(i);
    if (a < b)
      return false;
  }
  return true;
}

namespace {
template <typename Seq> std::string join(const Seq &s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

void partitions_rec(int n, int max_part, std::vector<int> &cur,
                    std::vector<Partition> &out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}
} // namespace

std::string to_string(const WeakComposition &a) { return join(a.parts()); }
std::string to_string(const Partition &a) { return join(a.parts()); }

std::vector<Partition> enum_partitions(int n, int max_part) {
  if (n < 0)
    throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, max_part < 0 ? n : max_part, cur, out);
  return out;
}

std::vector<Partition> enum_partitions_with_first_at_least(int n,
                                                           int min_first) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int a = n; a >= std::max(min_first, 1); --a) {
    cur.assign(1, a);
    partitions_rec(n - a, a, cur, out);
  }
  if (n == 0 && min_first <= 0)
    out.emplace_back();
  return out;
}

std::vector<WeakComposition> enum_weak_compositions(int n, int length) {
  std::vector<WeakComposition> out;
  if (length == 0) {
    if (n == 0)
      out.emplace_back();
    return out;
  }
  std::vector<int> cur(length, 0);
  auto rec = [&](auto &self, int i, int left) -> void {
    if (i == length - 1) {
      cur[i] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<WeakComposition> enum_compositions(int n) {
  std::vector<WeakComposition> out;
  std::vector<int> cur;
  auto rec = [&](auto &self, int left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= left; ++v) {
      cur.push_back(v);
      self(self, left - v);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

namespace {
std::vector<std::pair<int, int>> multiplicity_pairs(const Partition &mu) {
  std::map<int, int> m;
  for (int p : mu.parts())
    ++m[p];
  std::vector<std::pair<int, int>> v; // (multiplicity, part)
  for (auto [p, c] : m)
    v.emplace_back(c, p);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}
} // namespace

std::vector<int> multiplicity_profile(const Partition &mu) {
  std::vector<int> r;
  for (auto [c, p] : multiplicity_pairs(mu))
    r.push_back(c);
  return r;
}

std::vector<int> distinct_parts_by_multiplicity(const Partition &mu) {
  std::vector<int> r;
  for (auto [c, p] : multiplicity_pairs(mu))
    r.push_back(p);
  return r;
}

WeakComposition parse_composition(const std::string &text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](std::string s) {
    auto first = s.find_first_not_of(" \t");
    s = first == std::string::npos
            ? std::string()
            : s.substr(first, s.find_last_not_of(" \t") - first + 1);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception &) {
      throw std::invalid_argument("bad composition entry '" + s + "'");
    }
    if (pos != s.size() || v < 0)
      throw std::invalid_argument("bad composition entry '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    if (caret == std::string::npos) {
      parts.push_back(to_int(item));
    } else {
      int v = to_int(item.substr(0, caret));
      int r = to_int(item.substr(caret + 1));
      parts.insert(parts.end(), r, v);
    }
  }
  if (parts.empty())
    throw std::invalid_argument("empty composition");
  return WeakComposition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition &p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.parts())
    h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

std::size_t CompositionHash::operator()(const WeakComposition &c) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : c.parts())
    h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
  return h;
}

} // namespace ctq
