#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgcoe/comb/partition.hpp"
#include "wgcoe/comb/permutation.hpp"
#include "wgcoe/exact/polynomial.hpp"

namespace wgcoe::comb {

/// Sequence of indices in [N] (1-based values). bound == 0 means the
/// alphabet is symbolic; otherwise every entry must lie in [1, bound].
class IndexSequence {
public:
  IndexSequence() = default;
  explicit IndexSequence(std::vector<int> entries, int bound = 0);

  // "2,5,4,2" (parentheses and spaces tolerated).
  static IndexSequence parse(std::string_view text, int bound = 0);
  // (1^{mu_1}, 2^{mu_2}, ...), the canonical sequence i_mu of type mu.
  static IndexSequence canonical(const Partition& mu);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int bound() const { return bound_; }
  int operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<int>& entries() const { return entries_; }
  int max_entry() const;

  // (k_1, k_1, k_2, k_2, ...)
  IndexSequence doubled() const;
  // Right action: (i^sigma)_k = i_{sigma(k)}.
  IndexSequence act(const Permutation& sigma) const;
  // Entries relabeled by first occurrence: (7,2,7,3) -> (1,2,1,3).
  IndexSequence relabeled() const;

  std::string to_string() const;

  bool operator==(const IndexSequence& o) const { return entries_ == o.entries_; }
  auto operator<=>(const IndexSequence& o) const { return entries_ <=> o.entries_; }

private:
  std::vector<int> entries_;
  int bound_ = 0;
};

// Multiplicities of distinct values, sorted decreasingly.
Partition sequence_type(const IndexSequence& seq);

// True iff b = a^sigma for some permutation sigma (equal multisets).
bool sequences_equivalent(const IndexSequence& a, const IndexSequence& b);

// Number of sequences in [N]^n of type mu:
//   (n!/mu!) * N! / (prod_k m_k(mu)! * (N - l(mu))!),  0 when l(mu) > N.
BigInt count_sequences_of_type(const Partition& mu, long N);

// The same count as a polynomial in N:
//   n! / (mu! prod_k m_k!) * N (N-1) ... (N - l(mu) + 1).
exact::Polynomial count_sequences_polynomial(const Partition& mu);

inline constexpr std::size_t kDefaultStabilizerLength = 10;

// Streams every sigma with seq^sigma == seq: the product of the symmetric
// groups on the position classes of equal values. Throws ResourceError when
// seq is longer than max_length.
void for_each_stabilizer(const IndexSequence& seq, const std::function<void(const Permutation&)>& visit,
                         std::size_t max_length = kDefaultStabilizerLength);

std::vector<Permutation> stabilizer_permutations(const IndexSequence& seq,
                                                 std::size_t max_length = kDefaultStabilizerLength);

// Some sigma with from^sigma == to, or nullopt when the sequences are not
// equivalent.
std::optional<Permutation> transporter(const IndexSequence& from, const IndexSequence& to);

// Restricted growth strings of length n: every set partition of positions
// {1..n} labeled by first occurrence, e.g. (1,1,2), (1,2,1), ...
std::vector<IndexSequence> set_partition_patterns(int n);

}  // namespace wgcoe::comb
