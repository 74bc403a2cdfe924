#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wgcoe/exact/rational.hpp"

namespace wgcoe::comb {

using exact::BigInt;

/// Integer partition: weakly decreasing positive parts. Doubles as the cycle
/// type of a permutation and as the type of an index sequence.
///
/// Partitions order reverse-lexicographically within a fixed size, so
/// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1); smaller sizes come first.
class Partition {
public:
  Partition() = default;
  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // "3,3,1". Parts may be given in any order and are sorted; "1^4" and
  // "2^2,1" exponent shorthand is accepted.
  static Partition parse(std::string_view text);
  // Sorts arbitrary positive parts into a partition.
  static Partition from_parts(std::vector<int> parts);
  // (1^n)
  static Partition ones(int n);
  // (n)
  static Partition row(int n);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  // m_k: number of parts equal to k.
  int multiplicity(int k) const;
  // prod_i lambda_i!
  BigInt factorial_product() const;
  // prod_k m_k!
  BigInt multiplicity_factorial_product() const;
  // Centralizer order z = prod_k k^{m_k} m_k!; the class of cycle type
  // lambda in S_n has n!/z elements.
  BigInt centralizer_order() const;
  // (2 lambda_1, 2 lambda_2, ...)
  Partition doubled() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& o) const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions(int n);

}  // namespace wgcoe::comb
