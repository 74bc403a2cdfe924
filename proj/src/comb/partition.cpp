#include "wgcoe/comb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "wgcoe/errors.hpp"

namespace wgcoe::comb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw DomainError("empty partition");
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(start, comma - start));
    if (item.empty()) throw DomainError("malformed partition '" + std::string(text) + "'");
    const std::size_t caret = item.find('^');
    int value = 0, count = 1;
    if (caret == std::string_view::npos) {
      value = parse_int(item);
    } else {
      value = parse_int(item.substr(0, caret));
      count = parse_int(item.substr(caret + 1));
      if (count <= 0) throw DomainError("malformed partition exponent");
    }
    if (value <= 0) throw DomainError("partition parts must be positive");
    parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    start = comma + 1;
  }
  return from_parts(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::row(int n) { return Partition(std::vector<int>{n}); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

BigInt Partition::factorial_product() const {
  BigInt r = 1;
  for (int p : parts_) r *= exact::factorial(static_cast<unsigned>(p));
  return r;
}

BigInt Partition::multiplicity_factorial_product() const {
  BigInt r = 1;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    r *= exact::factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return r;
}

BigInt Partition::centralizer_order() const {
  BigInt r = multiplicity_factorial_product();
  for (int p : parts_) r *= p;
  return r;
}

Partition Partition::doubled() const {
  std::vector<int> d = parts_;
  for (int& p : d) p *= 2;
  return Partition(std::move(d));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size_ <=> o.size_; c != 0) return c;
  return o.parts_ <=> parts_;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

}  // namespace wgcoe::comb
