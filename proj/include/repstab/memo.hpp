#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace repstab {

// Insert-only memo table. Readers share the lock; a miss computes outside the
// lock, so concurrent misses may compute the same entry twice. The first
// insert wins and returned references stay valid for the table's lifetime.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return *it->second;
    }
    auto fresh = std::make_unique<const Value>(std::forward<Compute>(compute)());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<const Value>, Compare> table_;
};

}  // namespace repstab
