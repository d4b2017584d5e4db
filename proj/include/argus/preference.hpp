#ifndef ARGUS_PREFERENCE_HPP
#define ARGUS_PREFERENCE_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace argus {

/// A strict order declared as raw (preferred, lesser) pairs and queried
/// through its transitive closure. Cyclic declarations are invalid; the
/// cycle witness is reported by validate().
template <typename Key>
class PreferenceHierarchy {
public:
    PreferenceHierarchy() = default;

    void add(Key preferred, Key lesser) {
        pairs_.emplace_back(std::move(preferred), std::move(lesser));
        closed_ = false;
    }

    const std::vector<std::pair<Key, Key>>& pairs() const { return pairs_; }

    bool empty() const { return pairs_.empty(); }

    /// True iff (x, y) is in the transitive closure of the declared pairs.
    bool prefers(const Key& x, const Key& y) const {
        close();
        return closure_.count({x, y}) != 0;
    }

    bool comparable(const Key& x, const Key& y) const {
        return prefers(x, y) || prefers(y, x);
    }

    /// Returns a key lying on a preference cycle, if any. A reflexive pair
    /// counts as a cycle of length one.
    std::optional<Key> validate() const {
        close();
        for (const auto& [a, b] : closure_)
            if (a == b)
                return a;
        return std::nullopt;
    }

    bool operator==(const PreferenceHierarchy& other) const {
        return pairs_ == other.pairs_;
    }

private:
    void close() const {
        if (closed_)
            return;
        closure_.clear();
        closure_.insert(pairs_.begin(), pairs_.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<Key, Key>> added;
            for (const auto& [a, b] : closure_)
                for (const auto& [c, d] : closure_)
                    if (b == c && closure_.count({a, d}) == 0)
                        added.emplace_back(a, d);
            for (auto& p : added)
                grew |= closure_.insert(std::move(p)).second;
        }
        closed_ = true;
    }

    std::vector<std::pair<Key, Key>> pairs_;
    mutable std::set<std::pair<Key, Key>> closure_;
    mutable bool closed_ = false;
};

} // namespace argus

#endif
