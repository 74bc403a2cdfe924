#pragma once

#include <map>
#include <optional>
#include <variant>

#include "wgcoe/comb/index_sequence.hpp"
#include "wgcoe/weingarten.hpp"

namespace wgcoe::cue {

using comb::IndexSequence;
using comb::Partition;
using exact::BigRational;
using exact::RationalFunction;

struct Limits {
  int max_degree = 5;
};

// E[u_{i1 j1} ... u_{in jn} conj(u_{i'1 j'1} ... u_{i'm j'm})] over Haar U(N).
struct CueMomentSpec {
  IndexSequence i, j, i_prime, j_prime;
  std::optional<long> N;  // nullopt: symbolic in N
};

using ClassCounts = std::map<Partition, long>;

// Number of pairs (sigma, tau) with i^sigma = i', j^tau = j' for each cycle
// type of sigma tau^-1. Empty when the moment vanishes.
ClassCounts class_counts(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip,
                         const IndexSequence& jp);

// The two counting routes behind class_counts. The coset route walks
// Stab(i) sigma0 x Stab(j) tau0; the label route walks every g in S_n and
// counts the sigma with i^sigma = i' and j^(g^-1 sigma) = j'.
ClassCounts class_counts_coset(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip,
                               const IndexSequence& jp);
ClassCounts class_counts_labels(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip,
                                const IndexSequence& jp);

// True when n != m, i is not a rearrangement of i', or j of j'.
bool moment_vanishes(const CueMomentSpec& spec);

RationalFunction cue_joint_moment_symbolic(const CueMomentSpec& spec, const Limits& limits = {});
BigRational cue_joint_moment_at(const CueMomentSpec& spec, long N, const Limits& limits = {});

struct CueMoment {
  std::variant<RationalFunction, BigRational> value;
  wg::Regime regime = wg::Regime::symbolic;
  bool vanishes = false;
};

// Dispatches on spec.N. Throws DomainError on length mismatches or entries
// outside [N], ResourceError past limits.max_degree.
CueMoment cue_joint_moment(const CueMomentSpec& spec, const Limits& limits = {});

// mu! / (N (N+1) ... (N+n-1)). Requires n <= 12.
RationalFunction cue_row_moment(const Partition& mu);

// mu! * sum_{sigma in S_mu} Wg(sigma).
RationalFunction cue_diagonal_moment(const Partition& mu);
BigRational cue_diagonal_moment(const Partition& mu, long N);

}  // namespace wgcoe::cue
