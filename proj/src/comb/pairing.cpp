#include "wgcoe/comb/pairing.hpp"

#include <algorithm>
#include <numeric>

#include "wgcoe/errors.hpp"

namespace wgcoe::comb {

std::string Pairing::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) s += ',';
    s += '{' + std::to_string(pairs[k].first) + ',' + std::to_string(pairs[k].second) + '}';
  }
  return s + '}';
}

namespace {

void match(std::vector<int>& free, std::vector<std::pair<int, int>>& cur,
           const std::function<void(const Pairing&)>& visit) {
  if (free.empty()) {
    Pairing m{cur};
    std::sort(m.pairs.begin(), m.pairs.end());
    visit(m);
    return;
  }
  const int first = free.front();
  for (std::size_t k = 1; k < free.size(); ++k) {
    const int partner = free[k];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t t = 1; t < free.size(); ++t) {
      if (t != k) rest.push_back(free[t]);
    }
    cur.emplace_back(first, partner);
    match(rest, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_pairing(const std::vector<int>& index_set, const std::function<void(const Pairing&)>& visit) {
  std::vector<int> ground;
  std::vector<int> sorted = index_set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("index set has repeated elements");
  }
  for (int i : sorted) {
    if (i < 1) throw DomainError("index set elements must be positive");
    ground.push_back(2 * i - 1);
    ground.push_back(2 * i);
  }
  if (ground.empty()) throw DomainError("empty index set");
  std::vector<std::pair<int, int>> cur;
  match(ground, cur, visit);
}

std::vector<Pairing> pairings(const std::vector<int>& index_set) {
  std::vector<Pairing> out;
  for_each_pairing(index_set, [&](const Pairing& m) { out.push_back(m); });
  return out;
}

std::vector<Pairing> pairings(int n) {
  std::vector<int> set(static_cast<std::size_t>(n));
  std::iota(set.begin(), set.end(), 1);
  return pairings(set);
}

int kappa(const Pairing& m, int n) {
  DisjointSet ds(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) ds.unite(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(2 * k + 1));
  for (const auto& [p, q] : m.pairs) {
    if (p < 1 || q > 2 * n || p > 2 * n || q < 1) throw DomainError("pairing outside ground set {1..2n}");
    ds.unite(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1));
  }
  return static_cast<int>(ds.components());
}

int pairing_delta_product(const Pairing& m, const IndexSequence& i) {
  for (const auto& [p, q] : m.pairs) {
    if (p < 1 || q < 1 || static_cast<std::size_t>(p) > i.size() || static_cast<std::size_t>(q) > i.size()) {
      throw DomainError("pairing and sequence lengths do not match");
    }
    if (i[static_cast<std::size_t>(p - 1)] != i[static_cast<std::size_t>(q - 1)]) return 0;
  }
  return 1;
}

DisjointSet::DisjointSet(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

}  // namespace wgcoe::comb
