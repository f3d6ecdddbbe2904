#ifndef AQCI_MEMO_HPP
#define AQCI_MEMO_HPP

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace aqci {

/// Thread-safe memo table with value semantics. Concurrent inserts of the same
/// key are benign: the values are equal by construction, first writer wins.
template <class Key, class Value, class Compare = std::less<Key>>
class MemoCache {
public:
    std::optional<Value> find(const Key& k) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Key& k, const Value& v) {
        std::unique_lock lock(mutex_);
        map_.emplace(k, v);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value, Compare> map_;
};

}  // namespace aqci

#endif  // AQCI_MEMO_HPP
