#include "wgcoe/comb/index_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "wgcoe/errors.hpp"

namespace wgcoe::comb {

IndexSequence::IndexSequence(std::vector<int> entries, int bound)
    : entries_(std::move(entries)), bound_(bound) {
  for (int v : entries_) {
    if (v < 1) throw DomainError("index entries must be positive");
    if (bound_ > 0 && v > bound_) {
      throw DomainError("index " + std::to_string(v) + " outside [1, " + std::to_string(bound_) + "]");
    }
  }
}

IndexSequence IndexSequence::parse(std::string_view text, int bound) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == ',' || c == '(' || c == ')') {
      ++pos;
      continue;
    }
    int x = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), x);
    if (ec != std::errc()) throw DomainError("malformed index sequence '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    v.push_back(x);
  }
  if (v.empty()) throw DomainError("empty index sequence");
  return IndexSequence(std::move(v), bound);
}

IndexSequence IndexSequence::canonical(const Partition& mu) {
  std::vector<int> v;
  for (int i = 0; i < mu.length(); ++i) v.insert(v.end(), static_cast<std::size_t>(mu[static_cast<std::size_t>(i)]), i + 1);
  return IndexSequence(std::move(v));
}

int IndexSequence::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

IndexSequence IndexSequence::doubled() const {
  std::vector<int> v;
  v.reserve(2 * entries_.size());
  for (int x : entries_) {
    v.push_back(x);
    v.push_back(x);
  }
  return IndexSequence(std::move(v), bound_);
}

IndexSequence IndexSequence::act(const Permutation& sigma) const {
  if (static_cast<std::size_t>(sigma.degree()) != entries_.size()) {
    throw DomainError("permutation degree does not match sequence length");
  }
  std::vector<int> v(entries_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = entries_[static_cast<std::size_t>(sigma(static_cast<int>(k)))];
  return IndexSequence(std::move(v), bound_);
}

IndexSequence IndexSequence::relabeled() const {
  std::map<int, int> label;
  std::vector<int> v;
  v.reserve(entries_.size());
  for (int x : entries_) {
    auto [it, inserted] = label.emplace(x, static_cast<int>(label.size()) + 1);
    v.push_back(it->second);
  }
  return IndexSequence(std::move(v));
}

std::string IndexSequence::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s;
}

Partition sequence_type(const IndexSequence& seq) {
  std::map<int, int> counts;
  for (int x : seq.entries()) ++counts[x];
  std::vector<int> parts;
  for (const auto& [value, count] : counts) parts.push_back(count);
  return Partition::from_parts(std::move(parts));
}

bool sequences_equivalent(const IndexSequence& a, const IndexSequence& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> x = a.entries(), y = b.entries();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

BigInt count_sequences_of_type(const Partition& mu, long N) {
  const long len = mu.length();
  if (len > N) return 0;
  BigInt falling = 1;
  for (long k = 0; k < len; ++k) falling *= N - k;
  BigInt arrangements = exact::factorial(static_cast<unsigned>(mu.size())) / mu.factorial_product();
  return arrangements * falling / mu.multiplicity_factorial_product();
}

exact::Polynomial count_sequences_polynomial(const Partition& mu) {
  BigInt c = exact::factorial(static_cast<unsigned>(mu.size())) /
             (mu.factorial_product() * mu.multiplicity_factorial_product());
  exact::Polynomial p = exact::Polynomial::falling_factorial(static_cast<unsigned>(mu.length()));
  p *= exact::BigRational(c);
  return p;
}

namespace {

std::vector<std::vector<int>> position_classes(const IndexSequence& seq) {
  std::map<int, std::vector<int>> classes;
  for (std::size_t k = 0; k < seq.size(); ++k) classes[seq[k]].push_back(static_cast<int>(k));
  std::vector<std::vector<int>> out;
  for (auto& [value, pos] : classes) out.push_back(std::move(pos));
  return out;
}

}  // namespace

void for_each_stabilizer(const IndexSequence& seq, const std::function<void(const Permutation&)>& visit,
                         std::size_t max_length) {
  if (seq.size() > max_length) {
    throw ResourceError("stabilizer enumeration limited to length " + std::to_string(max_length) + ", got " +
                        std::to_string(seq.size()));
  }
  const auto classes = position_classes(seq);
  auto arrangement = classes;
  std::vector<int> img(seq.size());
  for (;;) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t t = 0; t < classes[c].size(); ++t) {
        img[static_cast<std::size_t>(classes[c][t])] = arrangement[c][t];
      }
    }
    visit(Permutation(img));
    std::size_t c = classes.size();
    bool advanced = false;
    while (c > 0) {
      --c;
      if (std::next_permutation(arrangement[c].begin(), arrangement[c].end())) {
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

std::vector<Permutation> stabilizer_permutations(const IndexSequence& seq, std::size_t max_length) {
  std::vector<Permutation> out;
  for_each_stabilizer(seq, [&](const Permutation& p) { out.push_back(p); }, max_length);
  return out;
}

std::optional<Permutation> transporter(const IndexSequence& from, const IndexSequence& to) {
  if (!sequences_equivalent(from, to)) return std::nullopt;
  std::map<int, std::vector<int>> available;
  for (std::size_t k = from.size(); k-- > 0;) available[from[k]].push_back(static_cast<int>(k));
  std::vector<int> img(from.size());
  for (std::size_t k = 0; k < to.size(); ++k) {
    auto& slots = available[to[k]];
    img[k] = slots.back();
    slots.pop_back();
  }
  return Permutation(std::move(img));
}

namespace {

void grow(int n, int max_label, std::vector<int>& cur, std::vector<IndexSequence>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 1; v <= max_label + 1; ++v) {
    cur.push_back(v);
    grow(n, std::max(max_label, v), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexSequence> set_partition_patterns(int n) {
  std::vector<IndexSequence> out;
  std::vector<int> cur;
  grow(n, 0, cur, out);
  return out;
}

}  // namespace wgcoe::comb
