#pragma once

#include <string>

#include "wgcoe/comb/partition.hpp"
#include "wgcoe/comb/permutation.hpp"
#include "wgcoe/exact/rational_function.hpp"
#include "wgcoe/memo.hpp"

namespace wgcoe::wg {

using comb::Partition;
using exact::BigRational;
using exact::LaurentSeries;
using exact::RationalFunction;

// Largest n accepted by the symbolic and per-N evaluators.
inline constexpr int kMaxDegree = 10;

/// Which formula produced a number. The character sum restricted to
/// l(lambda) <= N is a single rational function of N only for N >= n; below
/// that, values come from the truncated sum at the given N.
enum class Regime { symbolic, truncated };

std::string to_string(Regime r);
Regime regime_for(int n, long N);

// Wg^{U(N)}_n on the class of cycle type rho (n = |rho|):
//   (1/n!) sum_{lambda |- n} f^lambda chi^lambda(rho) / prod (N+j-i),
// summed over all lambda. Valid for integer N >= n. Results are memoized in
// wg_table(). Throws ResourceError when n > kMaxDegree.
RationalFunction wg_symbolic(const Partition& rho);
RationalFunction wg_symbolic(int n, const Partition& rho);

// Exact Wg at a concrete N >= 1. For N >= n this equals wg_symbolic at N;
// for N < n it is the truncated sum over l(lambda) <= N.
BigRational wg_eval(const Partition& rho, long N);
BigRational wg_eval(int n, const Partition& rho, long N);

RationalFunction wg_of_permutation(const comb::Permutation& sigma);

// sum_{sigma in S_mu} Wg(sigma) = (mu!/n!) sum_lambda f^lambda K_{lambda mu} / prod (N+j-i).
RationalFunction wg_young_subgroup_sum(const Partition& mu);
BigRational wg_young_subgroup_sum(const Partition& mu, long N);

enum class WgAsymptoticCase { identity, transposition, other };

struct WgAsymptotics {
  WgAsymptoticCase kind;
  LaurentSeries series;  // three retained terms
  long leading_exponent;
  BigRational leading_coefficient;
  bool holds;  // the expected order statement is satisfied
};

// Expands Wg(rho) in 1/N and checks the order statements:
//   identity       N^-n + O(N^-n-2)
//   transposition  -N^-n-1 + O(N^-n-3)
//   otherwise      O(N^-n-2)
// Requires n <= 8.
WgAsymptotics wg_asymptotic_check(const Partition& rho);

Memo<Partition, RationalFunction>& wg_table();

}  // namespace wgcoe::wg
