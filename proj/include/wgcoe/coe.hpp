#pragma once

#include <optional>
#include <string>
#include <variant>

#include "wgcoe/comb/index_sequence.hpp"
#include "wgcoe/exact/polynomial.hpp"
#include "wgcoe/weingarten.hpp"

namespace wgcoe::coe {

using comb::IndexSequence;
using comb::Partition;
using exact::BigRational;
using exact::LaurentSeries;
using exact::Polynomial;
using exact::RationalFunction;

struct Limits {
  int max_n = 4;  // number of v factors; the Weingarten degree is 2n
};

// E[v_{j1 j2} v_{j3 j4} ... conj(v_{j'1 j'2} ...)] for V = U^T U, U Haar on U(N).
struct CoeMomentSpec {
  IndexSequence j, j_prime;  // even lengths 2n and 2m
  std::optional<long> N;     // nullopt: symbolic in N
};

bool moment_vanishes(const CoeMomentSpec& spec);

// Sum over k, k' in [N]^n of E[U(k~, j | k'~, j')] with k~ = (k1,k1,k2,k2,...).
// The k-sum is grouped by the set partition of positions that k induces:
// each pattern with l blocks occurs N(N-1)...(N-l+1) times and its CUE
// integrals do not depend on the values chosen. The symbolic result is valid
// for N >= 2n; concrete N < 2n uses the truncated Weingarten function.
RationalFunction coe_joint_moment_symbolic(const CoeMomentSpec& spec, const Limits& limits = {});
BigRational coe_joint_moment_at(const CoeMomentSpec& spec, long N, const Limits& limits = {});

struct CoeMoment {
  std::variant<RationalFunction, BigRational> value;
  wg::Regime regime = wg::Regime::symbolic;
  bool vanishes = false;
};

// Dispatches on spec.N. DomainError on odd lengths or entries outside [N];
// ResourceError past limits.max_n.
CoeMoment coe_joint_moment(const CoeMomentSpec& spec, const Limits& limits = {});

// Literal enumeration of k in [N]^n and every rearrangement k' of k, with
// the CUE integrals memoized up to relabeling of the row values.
BigRational coe_joint_moment_bruteforce(const CoeMomentSpec& spec, long N, const Limits& limits = {});

// 2^n n! / ((N+1)(N+3)...(N+2n-1)) = E|v_ii|^{2n}.
RationalFunction coe_diag_moment_closed(int n);

// W(mu, N) = sum_{sigma in S_{2mu}} sum_{tau in S*_{2n}} Wg_{2n}(sigma tau),
// S*_{2n} permuting odd and even positions separately. Memoized in w_table().
RationalFunction coe_offdiag_W(const Partition& mu, const Limits& limits = {});

// E|v_ij|^{2n}, i != j:
//   sum_{mu |- n} (n!)^2 / ((mu!)^2 prod_k m_k!) N(N-1)...(N-l(mu)+1) W(mu, N).
RationalFunction coe_offdiag_moment(int n, const Limits& limits = {});

enum class Entry { diagonal, offdiagonal };

// Two-term expansions:
//   diagonal     2^n n! (N^-n - n^2 N^-n-1)
//   offdiagonal  n! N^-n - n! n(n+1)/2 N^-n-1
LaurentSeries coe_asymptotics(int n, Entry which);

enum class WAsymptoticCase { ones, two_ones, other };

struct WAsymptotics {
  WAsymptoticCase kind;
  LaurentSeries series;
  long leading_exponent;
  BigRational leading_coefficient;
  bool holds;
};

// Checks the expansion of W(mu, N):
//   mu = (1^n)        N^-2n - n^2 N^-2n-1 + O(N^-2n-2)
//   mu = (2,1^{n-2})  4 N^-2n + O(N^-2n-1)
//   otherwise         O(N^-2n)
WAsymptotics w_asymptotic_check(const Partition& mu, const Limits& limits = {});

struct NumeratorIdentity {
  Polynomial type_route;     // sum_mu #{k of type mu} prod_j (2mu_j - 1)!!
  Polynomial pairing_route;  // sum over pairings m of N^kappa(m)
  Polynomial product;        // N (N+2) ... (N+2n-2)
  bool holds() const { return type_route == product && pairing_route == product; }
};

// Requires n <= 6.
NumeratorIdentity numerator_identity_check(int n);

enum class TraceMoment { tr4, tr2sq, mixed };

std::string to_string(TraceMoment t);
TraceMoment parse_trace_moment(const std::string& text);

// E|tr V|^4, E|tr V^2|^2 and E[tr V^2 conj((tr V)^2)] assembled from
// symbolic entry moments.
RationalFunction coe_trace_moments_degree2(TraceMoment which);

Memo<Partition, RationalFunction>& w_table();

}  // namespace wgcoe::coe
