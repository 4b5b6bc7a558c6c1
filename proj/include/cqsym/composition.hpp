#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace cqsym {

class Partition;

// Ordered sequence of strictly positive parts. Compositions compare
// lexicographically, which is the order used for every serialized listing.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  // Parts sorted weakly decreasing.
  Partition underlying_partition() const;
  // (k*a_1, ..., k*a_m).
  Composition scaled(int k) const;
  Composition reversed() const;

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of strictly positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;

  Partition conjugate() const;
  Composition as_composition() const { return Composition(parts_); }
  // True when this partition is dominated by other (same weight assumed).
  bool dominated_by(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All compositions of n in lexicographic order. n == 0 yields the empty one.
std::vector<Composition> compositions_of(int n);
// All partitions of n in lexicographic order.
std::vector<Partition> partitions_of(int n);

// Distinct rearrangements of a partition, in lexicographic order.
std::vector<Composition> rearrangements(const Partition& lambda);

}  // namespace cqsym
