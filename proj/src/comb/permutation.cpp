#include "wgcoe/comb/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "wgcoe/errors.hpp"

namespace wgcoe::comb {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> img(images);
  for (int& v : img) --v;
  return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(std::string_view text, int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("malformed cycle notation '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos >= text.size()) throw DomainError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int v = 0;
      std::size_t digits = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0) throw DomainError("malformed cycle notation '" + std::string(text) + "'");
      if (v < 1 || v > m) throw DomainError("cycle entry out of range");
      if (used[static_cast<std::size_t>(v - 1)]) throw DomainError("cycles are not disjoint");
      used[static_cast<std::size_t>(v - 1)] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int m, int a, int b) {
  Permutation p = identity(m);
  std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::operator*(const Permutation& tau) const {
  if (tau.degree() != degree()) throw DomainError("composing permutations of different degree");
  std::vector<int> r(img_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = img_[static_cast<std::size_t>(tau.img_[x])];
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(img_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return Permutation(std::move(r));
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(img_[x])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_parts(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == static_cast<int>(start)) continue;
    s += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(img_[x])) {
      seen[x] = 1;
      if (!first) s += ' ';
      s += std::to_string(x + 1);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  do {
    visit(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace wgcoe::comb
