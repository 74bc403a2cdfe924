#include <numeric>
#include <random>

#include "doctest.h"
#include "wgcoe/comb/characters.hpp"
#include "wgcoe/errors.hpp"
#include "wgcoe/unitary.hpp"

using namespace wgcoe;
using comb::IndexSequence;
using comb::Partition;
using comb::Permutation;
using exact::BigRational;
using exact::Polynomial;
using exact::RationalFunction;

namespace {

IndexSequence seq(std::vector<int> v) { return IndexSequence(std::move(v)); }

cue::CueMomentSpec spec(std::vector<int> i, std::vector<int> j, std::vector<int> ip, std::vector<int> jp,
                        std::optional<long> N = std::nullopt) {
  return {seq(std::move(i)), seq(std::move(j)), seq(std::move(ip)), seq(std::move(jp)), N};
}

// Literal double sum over S_n x S_n, filtered by the index conditions.
RationalFunction brute_moment(const cue::CueMomentSpec& s) {
  const int n = static_cast<int>(s.i.size());
  if (static_cast<int>(s.i_prime.size()) != n) return {};
  std::vector<Permutation> sigmas, taus;
  comb::for_each_permutation(n, [&](const Permutation& p) {
    if (s.i.act(p) == s.i_prime) sigmas.push_back(p);
    if (s.j.act(p) == s.j_prime) taus.push_back(p);
  });
  RationalFunction total;
  for (const auto& a : sigmas) {
    for (const auto& b : taus) total = total + wg::wg_of_permutation(a * b.inverse());
  }
  return total;
}

IndexSequence random_sequence(std::mt19937_64& rng, int n, int alphabet) {
  std::uniform_int_distribution<int> d(1, alphabet);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = d(rng);
  return seq(v);
}

}  // namespace

TEST_CASE("joint moment examples") {
  CHECK(cue::cue_joint_moment_symbolic(spec({1}, {1}, {1}, {1})) ==
        RationalFunction::normalize(1, Polynomial::N()));
  CHECK(cue::moment_vanishes(spec({1}, {1}, {1, 1}, {1, 1})));
  CHECK(cue::cue_joint_moment_symbolic(spec({1}, {1}, {1, 1}, {1, 1})) == RationalFunction());
  CHECK(cue::cue_joint_moment_symbolic(spec({1, 1}, {1, 2}, {1, 1}, {1, 2})) ==
        RationalFunction::normalize(1, Polynomial::N() * Polynomial::linear(1)));
  CHECK(cue::cue_joint_moment_at(spec({1, 2}, {1, 1}, {2, 1}, {1, 1}), 4) == BigRational(1, 20));
}

TEST_CASE("validation and guards") {
  CHECK_THROWS_AS(cue::cue_joint_moment(spec({1, 2}, {1}, {1, 2}, {1, 2})), DomainError);
  CHECK_THROWS_AS(cue::cue_joint_moment(spec({3}, {1}, {3}, {1}, 2)), DomainError);
  CHECK_THROWS_AS(cue::cue_joint_moment(spec({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
                                             {1, 1, 1, 1, 1, 1})),
                  ResourceError);
  cue::Limits wide{6};
  CHECK_NOTHROW(cue::cue_joint_moment(spec({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
                                           {1, 1, 1, 1, 1, 1}),
                                      wide));
  const auto m = cue::cue_joint_moment(spec({1, 1}, {1, 1}, {1, 1}, {1, 1}, 1));
  CHECK(m.regime == wg::Regime::truncated);
  CHECK(std::get<BigRational>(m.value) == 1);
}

TEST_CASE("class count routes agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const int alphabet = 1 + trial % 3;
    const auto i = random_sequence(rng, n, alphabet);
    const auto j = random_sequence(rng, n, alphabet);
    std::vector<int> pi(static_cast<std::size_t>(n)), pj(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::iota(pj.begin(), pj.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::shuffle(pj.begin(), pj.end(), rng);
    const auto ip = i.act(Permutation::from_one_based(pi));
    const auto jp = j.act(Permutation::from_one_based(pj));
    const auto a = cue::class_counts_coset(i, j, ip, jp);
    const auto b = cue::class_counts_labels(i, j, ip, jp);
    CHECK(a == b);
    long total = 0;
    for (const auto& [rho, c] : a) total += c;
    CHECK(total == comb::sequence_type(i).factorial_product() * comb::sequence_type(j).factorial_product());
  }
}

TEST_CASE("brute force double sum") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const auto i = random_sequence(rng, n, 3);
    const auto j = random_sequence(rng, n, 3);
    const auto ip = random_sequence(rng, n, 3);
    const auto jp = random_sequence(rng, n, 3);
    cue::CueMomentSpec s{i, j, ip, jp, std::nullopt};
    CHECK(cue::cue_joint_moment_symbolic(s) == brute_moment(s));
    // Force a balanced case as well.
    cue::CueMomentSpec b{i, j, i.act(Permutation::identity(n)), j, std::nullopt};
    CHECK(cue::cue_joint_moment_symbolic(b) == brute_moment(b));
  }
}

TEST_CASE("row sum unitarity") {
  for (long N = 1; N <= 10; ++N) {
    BigRational total = 0;
    for (int col = 1; col <= N; ++col) total += cue::cue_joint_moment_at(spec({1}, {col}, {1}, {col}), N);
    CHECK(total == 1);
  }
}

TEST_CASE("row moments") {
  CHECK(cue::cue_row_moment(Partition::row(2)) == RationalFunction::normalize(2, Polynomial::rising_product(2)));
  CHECK(cue::cue_row_moment(Partition::ones(1)) == RationalFunction::normalize(1, Polynomial::N()));
  CHECK(cue::cue_row_moment(Partition::ones(3)) == RationalFunction::normalize(1, Polynomial::rising_product(3)));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : comb::partitions(n)) {
      const auto row = comb::IndexSequence::canonical(mu);
      const auto ones = seq(std::vector<int>(static_cast<std::size_t>(n), 1));
      CHECK(cue::cue_row_moment(mu) == cue::cue_joint_moment_symbolic({ones, row, ones, row, std::nullopt}));
    }
  }
  CHECK_THROWS_AS(cue::cue_row_moment(Partition::ones(13)), ResourceError);
}

TEST_CASE("diagonal moments") {
  CHECK(cue::cue_diagonal_moment(Partition::ones(2)) == RationalFunction::normalize(1, Polynomial::N().pow(2) - 1));
  for (int n = 1; n <= 6; ++n) {
    CHECK(cue::cue_diagonal_moment(Partition::row(n)) == cue::cue_row_moment(Partition::row(n)));
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : comb::partitions(n)) {
      const auto d = comb::IndexSequence::canonical(mu);
      const auto s = cue::CueMomentSpec{d, d, d, d, std::nullopt};
      CHECK(cue::cue_diagonal_moment(mu) == brute_moment(s));
      CHECK(cue::cue_diagonal_moment(mu) == cue::cue_joint_moment_symbolic(s));
      for (long N = 1; N <= 5; ++N) {
        if (d.max_entry() > N) continue;
        CHECK(cue::cue_diagonal_moment(mu, N) == cue::cue_joint_moment_at(s, N));
      }
    }
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 3;
    const long N = 2 + trial % 3;
    const auto i = random_sequence(rng, n, static_cast<int>(N));
    const auto j = random_sequence(rng, n, static_cast<int>(N));
    std::vector<int> pi(static_cast<std::size_t>(n)), pj(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::iota(pj.begin(), pj.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::shuffle(pj.begin(), pj.end(), rng);
    const auto ip = i.act(Permutation::from_one_based(pi));
    const auto jp = j.act(Permutation::from_one_based(pj));
    std::vector<int> relabel(static_cast<std::size_t>(N));
    std::iota(relabel.begin(), relabel.end(), 1);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    const auto map = [&](const IndexSequence& s) {
      std::vector<int> v = s.entries();
      for (auto& x : v) x = relabel[static_cast<std::size_t>(x - 1)];
      return seq(v);
    };
    const cue::CueMomentSpec a{i, j, ip, jp, N};
    const cue::CueMomentSpec b{map(i), map(j), map(ip), map(jp), N};
    const cue::CueMomentSpec swapped{ip, jp, i, j, N};
    const auto va = cue::cue_joint_moment_at(a, N);
    CHECK(va == cue::cue_joint_moment_at(b, N));
    CHECK(va == cue::cue_joint_moment_at(swapped, N));
  }
}
