#include "wgcoe/comb/characters.hpp"

#include <algorithm>
#include <functional>

#include "wgcoe/errors.hpp"

namespace wgcoe::comb {

Memo<CharacterKey, long>& character_memo() {
  static Memo<CharacterKey, long> memo;
  return memo;
}

Memo<CharacterKey, long>& kostka_memo() {
  static Memo<CharacterKey, long> memo;
  return memo;
}

namespace {

Partition tail(const Partition& rho) {
  return Partition(std::vector<int>(rho.vec().begin() + 1, rho.vec().end()));
}

long murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
  if (rho.length() == 0) return lambda.size() == 0 ? 1 : 0;
  return character_memo().get_or_compute({lambda, rho}, [&]() -> long {
    const int r = rho[0];
    const Partition rest = tail(rho);
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    long sum = 0;
    for (int i = 0; i < len; ++i) {
      const int b = beta[static_cast<std::size_t>(i)];
      const int nb = b - r;
      if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
      int between = 0;
      for (int x : beta) between += (x > nb && x < b);
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = nb;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts;
      for (int k = 0; k < len; ++k) {
        const int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
        if (part > 0) parts.push_back(part);
      }
      const long value = murnaghan_nakayama(Partition(std::move(parts)), rest);
      sum += (between % 2 ? -value : value);
    }
    return sum;
  });
}

// Number of ways to place `values` (a weight prefix) into shape lambda as
// successive horizontal strips.
long kostka_rec(const Partition& lambda, const std::vector<int>& weight, std::size_t upto);

long strips(const Partition& lambda, const std::vector<int>& weight, std::size_t upto) {
  // Remove a horizontal strip of size weight[upto-1] from lambda: row i keeps
  // nu_i cells with lambda_{i+1} <= nu_i <= lambda_i.
  const int strip = weight[upto - 1];
  const int len = lambda.length();
  std::vector<int> nu(static_cast<std::size_t>(len));
  long total = 0;
  std::function<void(int, int)> fill = [&](int row, int left) {
    if (row == len) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int v : nu) {
        if (v > 0) parts.push_back(v);
      }
      total += kostka_rec(Partition(std::move(parts)), weight, upto - 1);
      return;
    }
    const int hi = lambda[static_cast<std::size_t>(row)];
    const int lo = row + 1 < len ? lambda[static_cast<std::size_t>(row + 1)] : 0;
    for (int keep = hi; keep >= lo; --keep) {
      const int removed = hi - keep;
      if (removed > left) break;
      nu[static_cast<std::size_t>(row)] = keep;
      fill(row + 1, left - removed);
    }
  };
  fill(0, strip);
  return total;
}

long kostka_rec(const Partition& lambda, const std::vector<int>& weight, std::size_t upto) {
  if (upto == 0) return lambda.size() == 0 ? 1 : 0;
  // A column holds each value at most once, so l(lambda) <= number of values.
  if (static_cast<std::size_t>(lambda.length()) > upto) return 0;
  Partition prefix(std::vector<int>(weight.begin(), weight.begin() + static_cast<long>(upto)));
  return kostka_memo().get_or_compute({lambda, prefix}, [&] { return strips(lambda, weight, upto); });
}

}  // namespace

long irreducible_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw DomainError("character arguments have different sizes");
  return murnaghan_nakayama(lambda, rho);
}

long dimension(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> conj(len > 0 ? static_cast<std::size_t>(lambda[0]) : 0, 0);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  BigInt hooks = 1;
  for (int i = 0; i < len; ++i) {
    const int row = lambda[static_cast<std::size_t>(i)];
    for (int j = 0; j < row; ++j) hooks *= (row - j) + (conj[static_cast<std::size_t>(j)] - i) - 1;
  }
  BigInt f = exact::factorial(static_cast<unsigned>(lambda.size())) / hooks;
  return f.get_si();
}

exact::Polynomial content_product(const Partition& lambda) {
  exact::Polynomial p(1);
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) p *= exact::Polynomial::linear(j - i);
  }
  return p;
}

long kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("Kostka arguments have different sizes");
  return kostka_rec(lambda, mu.vec(), static_cast<std::size_t>(mu.length()));
}

BigInt class_size(const Partition& rho) {
  return exact::factorial(static_cast<unsigned>(rho.size())) / rho.centralizer_order();
}

}  // namespace wgcoe::comb
