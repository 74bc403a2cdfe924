#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace wgcoe {

/// Thread-safe memo table with compute-if-absent semantics. The value is
/// computed outside the lock, so two threads may compute the same entry;
/// the first insertion wins and both observe the same stored value.
template <class Key, class Value>
class Memo {
public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *hit;
    Value v = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, std::move(v));
    return it->second;
  }

  void insert(const Key& key, Value v) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, std::move(v));
  }

  std::vector<std::pair<Key, Value>> snapshot() const {
    std::shared_lock lock(mutex_);
    return {table_.begin(), table_.end()};
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace wgcoe
