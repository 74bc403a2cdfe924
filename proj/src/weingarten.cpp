#include "wgcoe/weingarten.hpp"

#include <algorithm>
#include <map>

#include "wgcoe/comb/characters.hpp"
#include "wgcoe/errors.hpp"

namespace wgcoe::wg {

using exact::BigInt;
using exact::Polynomial;

Memo<Partition, RationalFunction>& wg_table() {
  static Memo<Partition, RationalFunction> table;
  return table;
}

std::string to_string(Regime r) { return r == Regime::symbolic ? "symbolic" : "truncated"; }

Regime regime_for(int n, long N) { return N >= n ? Regime::symbolic : Regime::truncated; }

namespace {

void check_degree(int n) {
  if (n < 1) throw DomainError("Weingarten degree must be positive");
  if (n > kMaxDegree) {
    throw ResourceError("Weingarten degree " + std::to_string(n) + " exceeds the limit " + std::to_string(kMaxDegree));
  }
}

// Contents j - i of the cells of lambda with multiplicities.
std::map<int, unsigned> contents(const Partition& lambda) {
  std::map<int, unsigned> c;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) ++c[j - i];
  }
  return c;
}

// (scale / n!) * sum_lambda weight(lambda) / content_product(lambda) with all
// lambda |- n, assembled over the least common denominator.
template <class Weight>
RationalFunction character_sum(int n, const BigRational& scale, Weight&& weight) {
  const auto shapes = comb::partitions(n);
  std::map<int, unsigned> lcm;
  std::vector<std::map<int, unsigned>> per_shape;
  per_shape.reserve(shapes.size());
  for (const auto& lam : shapes) {
    per_shape.push_back(contents(lam));
    for (const auto& [c, m] : per_shape.back()) lcm[c] = std::max(lcm[c], m);
  }
  Polynomial den(1);
  for (const auto& [c, m] : lcm) den *= Polynomial::linear(c).pow(m);

  Polynomial num;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const BigInt w = weight(shapes[k]);
    if (w == 0) continue;
    Polynomial cofactor(BigRational{w});
    for (const auto& [c, m] : lcm) {
      auto it = per_shape[k].find(c);
      const unsigned have = it == per_shape[k].end() ? 0 : it->second;
      cofactor *= Polynomial::linear(c).pow(m - have);
    }
    num += cofactor;
  }
  num *= scale / BigRational(exact::factorial(static_cast<unsigned>(n)));
  return RationalFunction::normalize(num, den);
}

// Same sum at a concrete N, restricted to l(lambda) <= N.
template <class Weight>
BigRational truncated_sum(int n, long N, const BigRational& scale, Weight&& weight) {
  BigRational total = 0;
  for (const auto& lam : comb::partitions(n)) {
    if (lam.length() > N) continue;
    const BigInt w = weight(lam);
    if (w == 0) continue;
    total += BigRational(w) / comb::content_product(lam)(BigRational(N));
  }
  return total * scale / BigRational(exact::factorial(static_cast<unsigned>(n)));
}

}  // namespace

RationalFunction wg_symbolic(const Partition& rho) {
  const int n = rho.size();
  check_degree(n);
  return wg_table().get_or_compute(rho, [&] {
    return character_sum(n, BigRational(1), [&](const Partition& lam) -> BigInt {
      return BigInt(comb::dimension(lam)) * comb::irreducible_character(lam, rho);
    });
  });
}

RationalFunction wg_symbolic(int n, const Partition& rho) {
  if (rho.size() != n) throw DomainError("cycle type is not a partition of " + std::to_string(n));
  return wg_symbolic(rho);
}

BigRational wg_eval(const Partition& rho, long N) {
  const int n = rho.size();
  check_degree(n);
  if (N < 1) throw DomainError("matrix dimension must be positive");
  if (regime_for(n, N) == Regime::symbolic) return wg_symbolic(rho).eval(N);
  return truncated_sum(n, N, BigRational(1), [&](const Partition& lam) -> BigInt {
    return BigInt(comb::dimension(lam)) * comb::irreducible_character(lam, rho);
  });
}

BigRational wg_eval(int n, const Partition& rho, long N) {
  if (rho.size() != n) throw DomainError("cycle type is not a partition of " + std::to_string(n));
  return wg_eval(rho, N);
}

RationalFunction wg_of_permutation(const comb::Permutation& sigma) { return wg_symbolic(sigma.cycle_type()); }

RationalFunction wg_young_subgroup_sum(const Partition& mu) {
  const int n = mu.size();
  check_degree(n);
  return character_sum(n, BigRational(mu.factorial_product()), [&](const Partition& lam) -> BigInt {
    return BigInt(comb::dimension(lam)) * comb::kostka(lam, mu);
  });
}

BigRational wg_young_subgroup_sum(const Partition& mu, long N) {
  const int n = mu.size();
  check_degree(n);
  if (N < 1) throw DomainError("matrix dimension must be positive");
  if (regime_for(n, N) == Regime::symbolic) return wg_young_subgroup_sum(mu).eval(N);
  return truncated_sum(n, N, BigRational(mu.factorial_product()), [&](const Partition& lam) -> BigInt {
    return BigInt(comb::dimension(lam)) * comb::kostka(lam, mu);
  });
}

WgAsymptotics wg_asymptotic_check(const Partition& rho) {
  const int n = rho.size();
  if (n > 8) throw ResourceError("asymptotic check limited to n <= 8");
  WgAsymptotics out;
  out.series = exact::series(wg_symbolic(rho), 3);
  out.leading_exponent = out.series.leading_exponent;
  out.leading_coefficient = out.series.coefficients[0];

  std::vector<int> transposition(static_cast<std::size_t>(n - 1), 1);
  if (n >= 2) transposition[0] = 2;
  if (rho == Partition::ones(n)) {
    out.kind = WgAsymptoticCase::identity;
    out.holds = out.leading_exponent == -n && out.leading_coefficient == 1 && out.series.coefficient_of(-n - 1) == 0;
  } else if (n >= 2 && rho == Partition(transposition)) {
    out.kind = WgAsymptoticCase::transposition;
    out.holds = out.leading_exponent == -n - 1 && out.leading_coefficient == -1 &&
                out.series.coefficient_of(-n - 2) == 0;
  } else {
    out.kind = WgAsymptoticCase::other;
    out.holds = out.leading_exponent <= -n - 2;
  }
  return out;
}

}  // namespace wgcoe::wg
