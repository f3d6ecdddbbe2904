#ifndef AQCI_ENUMERATE_HPP
#define AQCI_ENUMERATE_HPP

// Enumeration of special data up to isomorphism.
//
// A labelled datum is a forest of set partitions of {1..n}: a partition into
// root blocks, each block of size >= 2 refined again into >= 2 parts, and so
// on down to singletons. Each non-singleton member carries a ratio in
// [2, max_ratio]; weights are products of ratios from the root down, with root
// weight 1. Labelled data are generated exhaustively and collapsed by
// canonical form.

#include "aqci/canonical.hpp"
#include "aqci/multiplicity.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace aqci {

struct EnumerationBudget {
    int n_max = 3;
    long max_ratio = 3;
    OracleBudget oracle;
};

namespace detail {

// All set partitions of `items`, each as a list of blocks.
inline std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& items) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == items.size()) {
            out.push_back(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(items[i]);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({items[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return out;
}

using EntryList = std::vector<SetEntry>;

inline std::vector<EntryList> combine(const std::vector<std::vector<EntryList>>& parts) {
    std::vector<EntryList> out{EntryList{}};
    for (const auto& choices : parts) {
        std::vector<EntryList> next;
        for (const auto& prefix : out) {
            for (const auto& c : choices) {
                EntryList e = prefix;
                e.insert(e.end(), c.begin(), c.end());
                next.push_back(std::move(e));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Every labelled tree whose top member is `block` with weight `w`.
inline std::vector<EntryList> labelled_trees(const std::vector<int>& block, const BigInt& w, long max_ratio) {
    if (block.size() == 1) return {EntryList{{block, w}}};
    std::vector<EntryList> out;
    for (const auto& part : set_partitions(block)) {
        if (part.size() < 2) continue;
        for (long ratio = 2; ratio <= max_ratio; ++ratio) {
            BigInt cw = w * ratio;
            std::vector<std::vector<EntryList>> pieces;
            for (const auto& b : part) pieces.push_back(labelled_trees(b, cw, max_ratio));
            for (auto& combo : combine(pieces)) {
                combo.push_back({block, w});
                out.push_back(std::move(combo));
            }
        }
    }
    return out;
}

inline void for_each_labelled(int n, long max_ratio, const std::function<void(SpecialDatum)>& fn) {
    std::vector<int> ground;
    for (int i = 1; i <= n; ++i) ground.push_back(i);
    for (const auto& part : set_partitions(ground)) {
        std::vector<std::vector<EntryList>> pieces;
        for (const auto& b : part) pieces.push_back(labelled_trees(b, 1, max_ratio));
        for (auto& sets : combine(pieces)) fn(SpecialDatum::from_candidate({n, std::move(sets)}));
    }
}

}  // namespace detail

/// Number of labelled special data of dimension exactly n with ratios in
/// [2, max_ratio]; a completeness reference for the isomorphism-class list.
inline std::size_t labelled_count(int n, long max_ratio) {
    std::size_t count = 0;
    detail::for_each_labelled(n, max_ratio, [&](SpecialDatum) { ++count; });
    return count;
}

/// One canonical representative per isomorphism class, dimension exactly n,
/// in canonical order.
inline std::vector<SpecialDatum> enumerate_dimension(int n, long max_ratio) {
    if (n < 1) throw std::invalid_argument("enumerate: dimension must be >= 1");
    if (max_ratio < 2) throw std::invalid_argument("enumerate: max_ratio must be >= 2");
    std::set<SpecialDatum> classes;
    detail::for_each_labelled(n, max_ratio, [&](SpecialDatum d) { classes.insert(canonical_form(d).datum); });
    return {classes.begin(), classes.end()};
}

/// All classes with dimension 1..n_max, ordered by dimension then canonical form.
inline std::vector<SpecialDatum> enumerate(const EnumerationBudget& budget) {
    if (budget.n_max < 1) throw std::invalid_argument("enumerate: n_max must be >= 1");
    std::vector<SpecialDatum> out;
    for (int n = 1; n <= budget.n_max; ++n) {
        auto level = enumerate_dimension(n, budget.max_ratio);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace aqci

#endif  // AQCI_ENUMERATE_HPP
