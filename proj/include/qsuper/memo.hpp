#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qsuper {

// Insert-only memo table. Readers share the lock; a value once stored never
// changes, so concurrent writers of the same key are harmless.
template <class K, class V, class H = std::hash<K>>
class MemoTable {
 public:
  const V* find(const K& k) const {
    std::shared_lock lk(mu_);
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : &it->second;
  }
  const V& insert(const K& k, V v) {
    std::unique_lock lk(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }
  void clear() {
    std::unique_lock lk(mu_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lk(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<K, V, H> map_;
};

}  // namespace qsuper
