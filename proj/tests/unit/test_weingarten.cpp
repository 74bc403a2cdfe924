#include <random>

#include "doctest.h"
#include "wgcoe/comb/characters.hpp"
#include "wgcoe/comb/index_sequence.hpp"
#include "wgcoe/errors.hpp"
#include "wgcoe/exact/render.hpp"
#include "wgcoe/weingarten.hpp"

using namespace wgcoe;
using comb::Partition;
using comb::Permutation;
using exact::BigRational;
using exact::Polynomial;
using exact::RationalFunction;

namespace {

RationalFunction rf(const Polynomial& num, const Polynomial& den) { return RationalFunction::normalize(num, den); }

Polynomial Npow(unsigned k) { return Polynomial::N().pow(k); }

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  comb::for_each_permutation(m, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// Wg at concrete N as the inverse of the Gram matrix G(s,t) = N^{#cycles(s t^-1)}
// over S_n, solved by Gauss-Jordan elimination. Returns Wg(s) = (G^-1)(s, id).
std::vector<BigRational> gram_inverse_column(const std::vector<Permutation>& group, long N) {
  const std::size_t g = group.size();
  std::vector<std::vector<BigRational>> a(g, std::vector<BigRational>(g + 1));
  std::size_t id_index = 0;
  for (std::size_t s = 0; s < g; ++s) {
    if (group[s].is_identity()) id_index = s;
    for (std::size_t t = 0; t < g; ++t) {
      const auto cycles = (group[s] * group[t].inverse()).cycle_type().length();
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(cycles));
      a[s][t] = BigRational(p);
    }
  }
  for (std::size_t s = 0; s < g; ++s) a[s][g] = (s == id_index) ? 1 : 0;
  for (std::size_t c = 0; c < g; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    const BigRational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < g; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const BigRational f = a[r][c];
      for (std::size_t k = c; k <= g; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<BigRational> out(g);
  for (std::size_t s = 0; s < g; ++s) out[s] = a[s][g];
  return out;
}

}  // namespace

TEST_CASE("small degree values") {
  CHECK(wg::wg_symbolic(Partition::ones(1)) == rf(1, Polynomial::N()));
  CHECK(wg::wg_symbolic(Partition::ones(2)) == rf(1, Npow(2) - 1));
  CHECK(wg::wg_symbolic(Partition::row(2)) == rf(-1, Polynomial::N() * (Npow(2) - 1)));
  CHECK(exact::render(wg::wg_symbolic(4, Partition::row(4))) == "-5/(N*(N^2-1)*(N^2-4)*(N^2-9))");
}

TEST_CASE("degree four table") {
  const Polynomial base = (Npow(2) - 1) * (Npow(2) - 4) * (Npow(2) - 9);
  const Polynomial N = Polynomial::N();
  CHECK(wg::wg_symbolic(Partition::row(4)) == rf(-5, N * base));
  CHECK(wg::wg_symbolic(Partition({3, 1})) == rf(2 * Npow(2) - 3, Npow(2) * base));
  CHECK(wg::wg_symbolic(Partition({2, 2})) == rf(Npow(2) + 6, Npow(2) * base));
  CHECK(wg::wg_symbolic(Partition({2, 1, 1})) == rf(-1, N * (Npow(2) - 1) * (Npow(2) - 9)));
  CHECK(wg::wg_symbolic(Partition::ones(4)) == rf(Npow(4) - 8 * Npow(2) + 6, Npow(2) * base));
}

TEST_CASE("evaluation regimes") {
  CHECK(wg::regime_for(2, 5) == wg::Regime::symbolic);
  CHECK(wg::regime_for(2, 1) == wg::Regime::truncated);
  CHECK(wg::wg_eval(2, Partition::ones(2), 5) == BigRational(1, 24));
  CHECK(wg::wg_eval(4, Partition({2, 1, 1}), 5) == BigRational(-1, 5 * 24 * 16));
  // At N = 1 only lambda = (2) survives: (1/2!) * 1 * 1 / (1 * 2).
  CHECK(wg::wg_eval(2, Partition::ones(2), 1) == BigRational(1, 4));
  CHECK(wg::wg_eval(2, Partition::row(2), 1) == BigRational(1, 4));
  // The symbolic value has a pole at N = 1.
  CHECK_THROWS_AS(wg::wg_symbolic(Partition::ones(2)).eval(1), PoleError);
  CHECK_THROWS_AS(wg::wg_symbolic(Partition::ones(11)), ResourceError);
  CHECK_THROWS_AS(wg::wg_eval(Partition::ones(11), 20), ResourceError);
  CHECK_THROWS_AS(wg::wg_symbolic(3, Partition::ones(2)), DomainError);
}

TEST_CASE("Gram matrix inverse oracle") {
  for (int n = 1; n <= 4; ++n) {
    const auto group = all_permutations(n);
    for (long N = 1; N <= 7; ++N) {
      // The Gram matrix is invertible only when N >= n.
      if (N < n) continue;
      const auto column = gram_inverse_column(group, N);
      for (std::size_t s = 0; s < group.size(); ++s) {
        CHECK(wg::wg_eval(group[s].cycle_type(), N) == column[s]);
        CHECK(wg::wg_of_permutation(group[s]).eval(N) == column[s]);
      }
    }
  }
}

TEST_CASE("truncated regime integrates U(1)") {
  // For N = 1, u is a phase: E|u|^{2n} = 1 = sum_{s,t in S_n} Wg(s t^-1) = n! sum_s Wg(s).
  for (int n = 1; n <= 6; ++n) {
    BigRational total = 0;
    for (const auto& rho : comb::partitions(n)) {
      total += BigRational(comb::class_size(rho)) * wg::wg_eval(rho, 1);
    }
    CHECK(total * BigRational(exact::factorial(static_cast<unsigned>(n))) == 1);
  }
}

TEST_CASE("class function properties") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n) {
    const auto group = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& s = group[pick(rng)];
      const auto& t = group[pick(rng)];
      CHECK(wg::wg_of_permutation(s * t) == wg::wg_of_permutation(t * s));
      CHECK(wg::wg_of_permutation(s.inverse()) == wg::wg_of_permutation(s));
    }
  }
}

TEST_CASE("full group sum") {
  for (int n = 1; n <= 6; ++n) {
    RationalFunction total;
    for (const auto& rho : comb::partitions(n)) {
      total = total + RationalFunction::normalize(Polynomial(BigRational(comb::class_size(rho))), 1) *
                          wg::wg_symbolic(rho);
    }
    CHECK(total == rf(1, Polynomial::rising_product(static_cast<unsigned>(n))));
  }
}

TEST_CASE("Young subgroup sums") {
  const Polynomial N = Polynomial::N();
  CHECK(wg::wg_young_subgroup_sum(Partition::row(2)) == rf(1, N * (N + 1)));
  for (int n = 1; n <= 6; ++n) {
    CHECK(wg::wg_young_subgroup_sum(Partition::row(n)) == rf(1, Polynomial::rising_product(static_cast<unsigned>(n))));
    CHECK(wg::wg_young_subgroup_sum(Partition::ones(n)) == wg::wg_symbolic(Partition::ones(n)));
  }
  // Brute force over the stabilizer of the canonical sequence i_mu, which is S_mu.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : comb::partitions(n)) {
      RationalFunction brute;
      comb::for_each_stabilizer(comb::IndexSequence::canonical(mu), [&](const Permutation& s) {
        brute = brute + wg::wg_of_permutation(s);
      });
      CHECK(wg::wg_young_subgroup_sum(mu) == brute);
      for (long M = 1; M <= 6; ++M) {
        BigRational per_n = 0;
        comb::for_each_stabilizer(comb::IndexSequence::canonical(mu), [&](const Permutation& s) {
          per_n += wg::wg_eval(s.cycle_type(), M);
        });
        CHECK(wg::wg_young_subgroup_sum(mu, M) == per_n);
      }
    }
  }
}

TEST_CASE("asymptotic orders") {
  auto a = wg::wg_asymptotic_check(Partition::ones(3));
  CHECK(a.kind == wg::WgAsymptoticCase::identity);
  CHECK(a.leading_exponent == -3);
  CHECK(a.leading_coefficient == 1);
  a = wg::wg_asymptotic_check(Partition({2, 1}));
  CHECK(a.kind == wg::WgAsymptoticCase::transposition);
  CHECK(a.leading_exponent == -4);
  CHECK(a.leading_coefficient == -1);
  a = wg::wg_asymptotic_check(Partition::row(3));
  CHECK(a.kind == wg::WgAsymptoticCase::other);
  CHECK(a.leading_exponent <= -5);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& rho : comb::partitions(n)) {
      CAPTURE(rho.to_string());
      CHECK(wg::wg_asymptotic_check(rho).holds);
    }
  }
  CHECK_THROWS_AS(wg::wg_asymptotic_check(Partition::ones(9)), ResourceError);
}
