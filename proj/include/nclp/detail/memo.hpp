#pragma once

#include <map>
#include <mutex>

namespace nclp::detail {

// Thread-safe fill-once cache. References handed out stay valid for the life
// of the cache because std::map nodes never move.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value fresh = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(fresh)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace nclp::detail
