#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wgcoe/comb/index_sequence.hpp"

namespace wgcoe::comb {

/// Perfect matching on the ground set  U_{i in I} {2i-1, 2i}  (1-based).
/// Pairs are stored as (p, q) with p < q, sorted by p.
struct Pairing {
  std::vector<std::pair<int, int>> pairs;

  std::string to_string() const;
  bool operator==(const Pairing&) const = default;
  auto operator<=>(const Pairing&) const = default;
};

// All (2|I|-1)!! pairings of the ground set of I, each exactly once.
std::vector<Pairing> pairings(const std::vector<int>& index_set);
// pairings({1, ..., n})
std::vector<Pairing> pairings(int n);
void for_each_pairing(const std::vector<int>& index_set, const std::function<void(const Pairing&)>& visit);

// Number of connected components of the graph on {1..2n} whose edges are
// the fixed pairs {2k-1, 2k} together with the pairs of m.
int kappa(const Pairing& m, int n);

// 1 iff every pair {p, q} of m joins equal entries i_p == i_q.
int pairing_delta_product(const Pairing& m, const IndexSequence& i);

/// Disjoint-set forest with path halving and union by size.
class DisjointSet {
public:
  explicit DisjointSet(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t components() const { return components_; }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

}  // namespace wgcoe::comb
