#include "wgcoe/coe.hpp"

#include <algorithm>
#include <map>

#include "wgcoe/comb/characters.hpp"
#include "wgcoe/comb/pairing.hpp"
#include "wgcoe/errors.hpp"
#include "wgcoe/unitary.hpp"

namespace wgcoe::coe {

using exact::BigInt;

Memo<Partition, RationalFunction>& w_table() {
  static Memo<Partition, RationalFunction> table;
  return table;
}

namespace {

BigInt bell(int n) {
  std::vector<BigInt> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

void check_n(int n, const Limits& limits) {
  if (n > limits.max_n) {
    const BigInt terms = bell(n) * exact::factorial(static_cast<unsigned>(n)) *
                         exact::factorial(static_cast<unsigned>(2 * n));
    throw ResourceError("COE moment with n = " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(limits.max_n) + " (about " + terms.get_str() + " Weingarten terms)");
  }
}

cue::Limits cue_limits(const Limits& limits) { return cue::Limits{2 * limits.max_n}; }

void validate(const CoeMomentSpec& spec, std::optional<long> N) {
  if (spec.j.empty() || spec.j_prime.empty()) throw DomainError("COE index sequences must not be empty");
  if (spec.j.size() % 2 || spec.j_prime.size() % 2) throw DomainError("COE index sequences must have even length");
  if (!N) return;
  if (*N < 1) throw DomainError("matrix dimension must be positive");
  for (const auto* seq : {&spec.j, &spec.j_prime}) {
    if (!seq->empty() && seq->max_entry() > *N) {
      throw DomainError("index " + std::to_string(seq->max_entry()) + " outside [1, " + std::to_string(*N) + "]");
    }
  }
}

std::vector<IndexSequence> rearrangements(const IndexSequence& k) {
  std::vector<int> v = k.entries();
  std::sort(v.begin(), v.end());
  std::vector<IndexSequence> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Class counts of the CUE double sums, accumulated per number of blocks l.
std::map<int, cue::ClassCounts> pattern_counts(const CoeMomentSpec& spec) {
  const int n = static_cast<int>(spec.j.size() / 2);
  std::map<int, cue::ClassCounts> out;
  for (const auto& pattern : comb::set_partition_patterns(n)) {
    const int blocks = pattern.max_entry();
    const auto rows = pattern.doubled();
    for (const auto& kp : rearrangements(pattern)) {
      for (const auto& [rho, c] : cue::class_counts(rows, spec.j, kp.doubled(), spec.j_prime)) {
        out[blocks][rho] += c;
      }
    }
  }
  return out;
}

}  // namespace

bool moment_vanishes(const CoeMomentSpec& spec) {
  return spec.j.size() != spec.j_prime.size() || !comb::sequences_equivalent(spec.j, spec.j_prime);
}

RationalFunction coe_joint_moment_symbolic(const CoeMomentSpec& spec, const Limits& limits) {
  validate(spec, std::nullopt);
  if (moment_vanishes(spec)) return {};
  check_n(static_cast<int>(spec.j.size() / 2), limits);
  RationalFunction total;
  for (const auto& [blocks, counts] : pattern_counts(spec)) {
    RationalFunction inner;
    for (const auto& [rho, c] : counts) inner = inner + RationalFunction(Polynomial(c)) * wg::wg_symbolic(rho);
    total = total + RationalFunction(Polynomial::falling_factorial(static_cast<unsigned>(blocks))) * inner;
  }
  return total;
}

BigRational coe_joint_moment_at(const CoeMomentSpec& spec, long N, const Limits& limits) {
  validate(spec, N);
  if (moment_vanishes(spec)) return 0;
  check_n(static_cast<int>(spec.j.size() / 2), limits);
  BigRational total = 0;
  for (const auto& [blocks, counts] : pattern_counts(spec)) {
    const BigRational ways = Polynomial::falling_factorial(static_cast<unsigned>(blocks))(BigRational(N));
    if (ways == 0) continue;
    BigRational inner = 0;
    for (const auto& [rho, c] : counts) inner += BigRational(c) * wg::wg_eval(rho, N);
    total += ways * inner;
  }
  return total;
}

CoeMoment coe_joint_moment(const CoeMomentSpec& spec, const Limits& limits) {
  validate(spec, spec.N);
  CoeMoment out;
  out.vanishes = moment_vanishes(spec);
  if (spec.N) {
    out.regime = wg::regime_for(static_cast<int>(spec.j.size()), *spec.N);
    out.value = coe_joint_moment_at(spec, *spec.N, limits);
  } else {
    out.value = coe_joint_moment_symbolic(spec, limits);
  }
  return out;
}

BigRational coe_joint_moment_bruteforce(const CoeMomentSpec& spec, long N, const Limits& limits) {
  validate(spec, N);
  if (moment_vanishes(spec)) return 0;
  const int n = static_cast<int>(spec.j.size() / 2);
  check_n(n, limits);
  std::map<std::vector<int>, BigRational> memo;
  BigRational total = 0;
  std::vector<int> k(static_cast<std::size_t>(n), 1);
  while (true) {
    for (const auto& kp : rearrangements(IndexSequence(k))) {
      std::vector<int> joint = k;
      joint.insert(joint.end(), kp.entries().begin(), kp.entries().end());
      const auto key = IndexSequence(joint).relabeled().entries();
      auto it = memo.find(key);
      if (it == memo.end()) {
        const IndexSequence a(std::vector<int>(key.begin(), key.begin() + n));
        const IndexSequence b(std::vector<int>(key.begin() + n, key.end()));
        const cue::CueMomentSpec s{a.doubled(), spec.j, b.doubled(), spec.j_prime, N};
        it = memo.emplace(key, cue::cue_joint_moment_at(s, N, cue_limits(limits))).first;
      }
      total += it->second;
    }
    int pos = n - 1;
    while (pos >= 0 && k[static_cast<std::size_t>(pos)] == N) k[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++k[static_cast<std::size_t>(pos)];
  }
  return total;
}

RationalFunction coe_diag_moment_closed(int n) {
  if (n < 1) throw DomainError("moment order must be positive");
  BigInt scale = exact::factorial(static_cast<unsigned>(n));
  scale <<= static_cast<mp_bitcnt_t>(n);
  return RationalFunction::normalize(Polynomial(BigRational(scale)),
                                     Polynomial::rising_product(static_cast<unsigned>(n), 2, 1));
}

RationalFunction coe_offdiag_W(const Partition& mu, const Limits& limits) {
  const int n = mu.size();
  check_n(n, limits);
  return w_table().get_or_compute(mu, [&] {
    const auto rows = IndexSequence::canonical(mu.doubled());
    std::vector<int> alternating;
    for (int k = 0; k < n; ++k) alternating.insert(alternating.end(), {1, 2});
    const IndexSequence cols(alternating);
    // tau and tau^-1 both range over S*_{2n}, so this is the CUE double sum.
    const cue::CueMomentSpec s{rows, cols, rows, cols, std::nullopt};
    return cue::cue_joint_moment_symbolic(s, cue_limits(limits));
  });
}

RationalFunction coe_offdiag_moment(int n, const Limits& limits) {
  if (n < 1) throw DomainError("moment order must be positive");
  check_n(n, limits);
  const BigInt nf = exact::factorial(static_cast<unsigned>(n));
  RationalFunction total;
  for (const auto& mu : comb::partitions(n)) {
    const BigInt muf = mu.factorial_product();
    const BigRational weight =
        exact::make_rational(BigInt(nf * nf), BigInt(muf * muf * mu.multiplicity_factorial_product()));
    Polynomial ways = Polynomial::falling_factorial(static_cast<unsigned>(mu.length()));
    ways *= weight;
    total = total + RationalFunction(ways) * coe_offdiag_W(mu, limits);
  }
  return total;
}

LaurentSeries coe_asymptotics(int n, Entry which) {
  if (n < 1) throw DomainError("moment order must be positive");
  const BigInt nf = exact::factorial(static_cast<unsigned>(n));
  LaurentSeries s;
  s.leading_exponent = -n;
  if (which == Entry::diagonal) {
    BigInt lead = nf;
    lead <<= static_cast<mp_bitcnt_t>(n);
    s.coefficients = {BigRational(lead), BigRational(-lead * n * n)};
  } else {
    s.coefficients = {BigRational(nf), exact::make_rational(BigInt(-nf * n * (n + 1)), BigInt(2))};
  }
  return s;
}

WAsymptotics w_asymptotic_check(const Partition& mu, const Limits& limits) {
  const int n = mu.size();
  WAsymptotics out;
  out.series = exact::series(coe_offdiag_W(mu, limits), 3);
  out.leading_exponent = out.series.leading_exponent;
  out.leading_coefficient = out.series.coefficients[0];
  std::vector<int> two_ones(static_cast<std::size_t>(std::max(n - 1, 1)), 1);
  two_ones[0] = 2;
  if (mu == Partition::ones(n)) {
    out.kind = WAsymptoticCase::ones;
    out.holds = out.leading_exponent == -2 * n && out.leading_coefficient == 1 &&
                out.series.coefficient_of(-2 * n - 1) == -n * n;
  } else if (n >= 2 && mu == Partition(two_ones)) {
    out.kind = WAsymptoticCase::two_ones;
    out.holds = out.leading_exponent == -2 * n && out.leading_coefficient == 4;
  } else {
    out.kind = WAsymptoticCase::other;
    out.holds = out.leading_exponent <= -2 * n;
  }
  return out;
}

NumeratorIdentity numerator_identity_check(int n) {
  if (n < 1) throw DomainError("moment order must be positive");
  if (n > 6) throw ResourceError("numerator identity limited to n <= 6");
  NumeratorIdentity out;
  for (const auto& mu : comb::partitions(n)) {
    BigInt pairs = 1;
    for (int part : mu.parts()) pairs *= exact::double_factorial_odd(static_cast<unsigned>(part));
    Polynomial term = comb::count_sequences_polynomial(mu);
    term *= BigRational(pairs);
    out.type_route += term;
  }
  std::map<int, long> by_kappa;
  comb::for_each_pairing([&] {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) all[static_cast<std::size_t>(k)] = k + 1;
    return all;
  }(), [&](const comb::Pairing& m) { ++by_kappa[comb::kappa(m, n)]; });
  for (const auto& [kappa, count] : by_kappa) {
    out.pairing_route += Polynomial(count) * Polynomial::N().pow(static_cast<unsigned>(kappa));
  }
  out.product = Polynomial::rising_product(static_cast<unsigned>(n), 2);
  return out;
}

std::string to_string(TraceMoment t) {
  switch (t) {
    case TraceMoment::tr4: return "tr4";
    case TraceMoment::tr2sq: return "tr2sq";
    case TraceMoment::mixed: return "mixed";
  }
  return {};
}

TraceMoment parse_trace_moment(const std::string& text) {
  if (text == "tr4") return TraceMoment::tr4;
  if (text == "tr2sq") return TraceMoment::tr2sq;
  if (text == "mixed") return TraceMoment::mixed;
  throw DomainError("unknown trace moment '" + text + "' (expected tr4, tr2sq or mixed)");
}

RationalFunction coe_trace_moments_degree2(TraceMoment which) {
  const auto entry = [](std::vector<int> j, std::vector<int> jp) {
    return coe_joint_moment_symbolic({IndexSequence(std::move(j)), IndexSequence(std::move(jp)), std::nullopt});
  };
  const RationalFunction diag = entry({1, 1, 1, 1}, {1, 1, 1, 1});
  RationalFunction pair;
  switch (which) {
    case TraceMoment::tr4: pair = entry({1, 1, 2, 2}, {1, 1, 2, 2}); break;
    case TraceMoment::tr2sq: pair = entry({1, 2, 1, 2}, {1, 2, 1, 2}); break;
    case TraceMoment::mixed: pair = entry({1, 2, 1, 2}, {1, 1, 2, 2}); break;
  }
  const Polynomial N = Polynomial::N();
  return RationalFunction(N) * diag + RationalFunction(2 * N * (N - 1)) * pair;
}

}  // namespace wgcoe::coe
