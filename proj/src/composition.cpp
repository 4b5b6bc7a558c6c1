#include "cqsym/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cqsym/errors.hpp"

namespace cqsym {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive: " + join_parts(parts_));
  }
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Composition::underlying_partition() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

Composition Composition::scaled(int k) const {
  std::vector<int> p = parts_;
  for (int& x : p) x *= k;
  return Composition(std::move(p));
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string Composition::to_string() const { return join_parts(parts_); }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw InvalidArgument("not a partition: " + join_parts(parts_));
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int cnt = 0;
    for (int p : parts_) cnt += (p >= j);
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

bool Partition::dominated_by(const Partition& other) const {
  long a = 0, b = 0;
  std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < other.parts_.size() ? other.parts_[i] : 0;
    if (a > b) return false;
  }
  return true;
}

std::string Partition::to_string() const { return join_parts(parts_); }

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(rest, max_part); ++p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> rearrangements(const Partition& lambda) {
  std::vector<int> p = lambda.parts();
  std::sort(p.begin(), p.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace cqsym
