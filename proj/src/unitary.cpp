#include "wgcoe/unitary.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "wgcoe/errors.hpp"

namespace wgcoe::cue {

using exact::BigInt;
using exact::Polynomial;

namespace {

constexpr int kMaxKernel = 12;
using Perm = std::array<std::uint8_t, kMaxKernel>;

// Cycle type packed as 4-bit counts per cycle length.
std::uint64_t cycle_key(const Perm& p, int n) {
  std::uint16_t seen = 0;
  std::uint64_t key = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & (1u << s)) continue;
    int len = 0;
    for (int x = s; !(seen & (1u << x)); x = p[static_cast<std::size_t>(x)]) {
      seen |= static_cast<std::uint16_t>(1u << x);
      ++len;
    }
    key += std::uint64_t{1} << (4 * (len - 1));
  }
  return key;
}

Partition decode(std::uint64_t key, int n) {
  std::vector<int> parts;
  for (int len = n; len >= 1; --len) {
    const int count = static_cast<int>((key >> (4 * (len - 1))) & 0xF);
    parts.insert(parts.end(), static_cast<std::size_t>(count), len);
  }
  return Partition(std::move(parts));
}

ClassCounts finish(const std::unordered_map<std::uint64_t, long>& raw, int n) {
  ClassCounts out;
  for (const auto& [key, count] : raw) out[decode(key, n)] += count;
  return out;
}

Perm to_kernel(const comb::Permutation& p) {
  Perm out{};
  for (int x = 0; x < p.degree(); ++x) out[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(p(x));
  return out;
}

void check_kernel_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxKernel)) throw ResourceError("moment degree too large");
}

bool balanced(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip, const IndexSequence& jp) {
  return i.size() == ip.size() && comb::sequences_equivalent(i, ip) && comb::sequences_equivalent(j, jp);
}

void validate(const CueMomentSpec& spec, std::optional<long> N) {
  if (spec.i.size() != spec.j.size()) throw DomainError("i and j have different lengths");
  if (spec.i_prime.size() != spec.j_prime.size()) throw DomainError("i' and j' have different lengths");
  if (!N) return;
  if (*N < 1) throw DomainError("matrix dimension must be positive");
  for (const auto* seq : {&spec.i, &spec.j, &spec.i_prime, &spec.j_prime}) {
    if (!seq->empty() && seq->max_entry() > *N) {
      throw DomainError("index " + std::to_string(seq->max_entry()) + " outside [1, " + std::to_string(*N) + "]");
    }
  }
}

void check_limits(std::size_t n, const Limits& limits) {
  if (static_cast<int>(n) > limits.max_degree) {
    throw ResourceError("moment degree " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(limits.max_degree));
  }
}

}  // namespace

ClassCounts class_counts_coset(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip,
                               const IndexSequence& jp) {
  if (!balanced(i, j, ip, jp)) return {};
  const std::size_t n = i.size();
  check_kernel_size(n);
  const auto sigma0 = comb::transporter(i, ip);
  const auto tau0 = comb::transporter(j, jp);
  std::vector<Perm> left;
  comb::for_each_stabilizer(i, [&](const comb::Permutation& s) { left.push_back(to_kernel(s * *sigma0)); }, n);
  // Store (t tau0)^-1 so the inner loop is a single composition.
  std::vector<Perm> right;
  comb::for_each_stabilizer(j, [&](const comb::Permutation& t) { right.push_back(to_kernel((t * *tau0).inverse())); }, n);

  std::unordered_map<std::uint64_t, long> raw;
  Perm g{};
  for (const auto& s : left) {
    for (const auto& t : right) {
      for (std::size_t x = 0; x < n; ++x) g[x] = s[t[x]];
      ++raw[cycle_key(g, static_cast<int>(n))];
    }
  }
  return finish(raw, static_cast<int>(n));
}

ClassCounts class_counts_labels(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip,
                                const IndexSequence& jp) {
  if (!balanced(i, j, ip, jp)) return {};
  const std::size_t n = i.size();
  check_kernel_size(n);
  const std::int64_t base = std::max(j.empty() ? 0 : j.max_entry(), jp.empty() ? 0 : jp.max_entry()) + 1;
  std::vector<std::int64_t> target(n), labels(n);
  for (std::size_t k = 0; k < n; ++k) target[k] = ip[k] * base + jp[k];
  std::sort(target.begin(), target.end());
  long weight = 1;
  for (std::size_t k = 0, run = 1; k < n; ++k) {
    run = (k > 0 && target[k] == target[k - 1]) ? run + 1 : 1;
    weight *= static_cast<long>(run);
  }

  // h = g^-1 runs over S_n; g and h share a cycle type. A sigma with
  // i^sigma = i' and j^(h sigma) = j' sends position k to a p carrying the
  // label (i_p, j_{h(p)}) = (i'_k, j'_k), so the count is prod mult! when
  // the label multisets agree.
  Perm h{};
  std::iota(h.begin(), h.begin() + static_cast<long>(n), std::uint8_t{0});
  std::unordered_map<std::uint64_t, long> raw;
  do {
    for (std::size_t p = 0; p < n; ++p) labels[p] = i[p] * base + j[h[p]];
    std::sort(labels.begin(), labels.end());
    if (labels == target) raw[cycle_key(h, static_cast<int>(n))] += weight;
  } while (std::next_permutation(h.begin(), h.begin() + static_cast<long>(n)));
  return finish(raw, static_cast<int>(n));
}

ClassCounts class_counts(const IndexSequence& i, const IndexSequence& j, const IndexSequence& ip,
                         const IndexSequence& jp) {
  if (!balanced(i, j, ip, jp)) return {};
  const auto order = [](const IndexSequence& s) {
    return comb::sequence_type(s).factorial_product();
  };
  const BigInt pairs = order(i) * order(j);
  if (pairs <= exact::factorial(static_cast<unsigned>(i.size()))) return class_counts_coset(i, j, ip, jp);
  return class_counts_labels(i, j, ip, jp);
}

bool moment_vanishes(const CueMomentSpec& spec) {
  return !balanced(spec.i, spec.j, spec.i_prime, spec.j_prime);
}

RationalFunction cue_joint_moment_symbolic(const CueMomentSpec& spec, const Limits& limits) {
  validate(spec, std::nullopt);
  if (moment_vanishes(spec)) return {};
  check_limits(spec.i.size(), limits);
  RationalFunction total;
  for (const auto& [rho, count] : class_counts(spec.i, spec.j, spec.i_prime, spec.j_prime)) {
    total = total + RationalFunction(Polynomial(count)) * wg::wg_symbolic(rho);
  }
  return total;
}

BigRational cue_joint_moment_at(const CueMomentSpec& spec, long N, const Limits& limits) {
  validate(spec, N);
  if (moment_vanishes(spec)) return 0;
  check_limits(spec.i.size(), limits);
  BigRational total = 0;
  for (const auto& [rho, count] : class_counts(spec.i, spec.j, spec.i_prime, spec.j_prime)) {
    total += BigRational(count) * wg::wg_eval(rho, N);
  }
  return total;
}

CueMoment cue_joint_moment(const CueMomentSpec& spec, const Limits& limits) {
  CueMoment out;
  validate(spec, spec.N);
  out.vanishes = moment_vanishes(spec);
  if (spec.N) {
    out.regime = wg::regime_for(static_cast<int>(spec.i.size()), *spec.N);
    out.value = cue_joint_moment_at(spec, *spec.N, limits);
  } else {
    out.value = cue_joint_moment_symbolic(spec, limits);
  }
  return out;
}

RationalFunction cue_row_moment(const Partition& mu) {
  const int n = mu.size();
  if (n > 12) throw ResourceError("row moment limited to n <= 12");
  return RationalFunction::normalize(Polynomial(BigRational(mu.factorial_product())),
                                     Polynomial::rising_product(static_cast<unsigned>(n)));
}

RationalFunction cue_diagonal_moment(const Partition& mu) {
  return RationalFunction(Polynomial(BigRational(mu.factorial_product()))) * wg::wg_young_subgroup_sum(mu);
}

BigRational cue_diagonal_moment(const Partition& mu, long N) {
  return BigRational(mu.factorial_product()) * wg::wg_young_subgroup_sum(mu, N);
}

}  // namespace wgcoe::cue
