#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wgcoe/comb/partition.hpp"

namespace wgcoe::comb {

/// Permutation of {0, ..., m-1}. Rendering and parsing use 1-based cycle
/// notation, e.g. "(1 3)(2 4)"; the identity renders as "()".
///
/// Composition: (sigma * tau)(x) = sigma(tau(x)).
class Permutation {
public:
  Permutation() = default;
  // Throws DomainError unless images is a bijection of [0, m).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  static Permutation from_one_based(const std::vector<int>& images);
  // Cycle notation over {1..m}; omitted points are fixed.
  static Permutation parse_cycles(std::string_view text, int m);
  // The transposition (a b), 1-based.
  static Permutation transposition(int m, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& tau) const;
  Permutation inverse() const;
  Partition cycle_type() const;
  bool is_identity() const;

  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> img_;
};

// Visits all m! permutations of degree m in lexicographic order of images.
void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit);

}  // namespace wgcoe::comb
