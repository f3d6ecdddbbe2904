#ifndef AQCI_CANONICAL_HPP
#define AQCI_CANONICAL_HPP

// Isomorphism classes of special data. Two data are isomorphic when a
// permutation of the ground set carries one onto the other, preserving
// membership and weights. Since root weights are 1 and sibling weights agree,
// a datum is determined up to isomorphism by its rooted forest with each
// internal node labelled by the ratio w(child)/w(node).

#include "aqci/datum.hpp"

#include <algorithm>
#include <vector>

namespace aqci {

/// Structural signature of a subtree. Leaves have ratio 0 and no children.
struct Signature {
    std::size_t leaves = 1;
    BigInt ratio = 0;
    std::vector<Signature> children;  // sorted ascending

    friend int compare(const Signature& a, const Signature& b) {
        if (a.leaves != b.leaves) return a.leaves < b.leaves ? -1 : 1;
        if (a.ratio != b.ratio) return a.ratio < b.ratio ? -1 : 1;
        if (a.children.size() != b.children.size()) return a.children.size() < b.children.size() ? -1 : 1;
        for (std::size_t i = 0; i < a.children.size(); ++i)
            if (int c = compare(a.children[i], b.children[i])) return c;
        return 0;
    }
    friend bool operator<(const Signature& a, const Signature& b) { return compare(a, b) < 0; }
    friend bool operator==(const Signature& a, const Signature& b) { return compare(a, b) == 0; }
};

struct CanonicalForm {
    SpecialDatum datum;
    /// permutation[i-1] is the canonical label of original element i.
    std::vector<int> permutation;
};

namespace detail {

struct SigNode {
    Signature sig;
    std::vector<NodeRef> ordered_children;
};

inline void build_signatures(const SpecialDatum& d, NodeRef j, std::vector<SigNode>& out) {
    auto kids = d.children(j);
    SigNode& me = out[j.index];
    if (kids.empty()) {
        me.sig = Signature{};
        return;
    }
    for (NodeRef c : kids) build_signatures(d, c, out);
    std::vector<NodeRef> ord(kids.begin(), kids.end());
    std::stable_sort(ord.begin(), ord.end(), [&](NodeRef a, NodeRef b) { return out[a.index].sig < out[b.index].sig; });
    Signature s;
    s.leaves = 0;
    s.ratio = d.weight(kids.front()) / d.weight(j);
    for (NodeRef c : ord) {
        s.leaves += out[c.index].sig.leaves;
        s.children.push_back(out[c.index].sig);
    }
    out[j.index].sig = std::move(s);
    out[j.index].ordered_children = std::move(ord);
}

inline void assign_labels(const SpecialDatum& d, NodeRef j, const std::vector<SigNode>& sigs,
                          std::vector<int>& perm, int& next) {
    if (sigs[j.index].ordered_children.empty()) {
        perm[d.elements(j).front() - 1] = next++;
        return;
    }
    for (NodeRef c : sigs[j.index].ordered_children) assign_labels(d, c, sigs, perm, next);
}

inline std::vector<NodeRef> sorted_roots(const SpecialDatum& d, const std::vector<SigNode>& sigs) {
    std::vector<NodeRef> roots(d.roots().begin(), d.roots().end());
    std::stable_sort(roots.begin(), roots.end(),
                     [&](NodeRef a, NodeRef b) { return sigs[a.index].sig < sigs[b.index].sig; });
    return roots;
}

}  // namespace detail

/// Sorted multiset of root signatures; equal iff the data are isomorphic.
inline std::vector<Signature> forest_signature(const SpecialDatum& d) {
    std::vector<detail::SigNode> sigs(d.size());
    for (NodeRef r : d.roots()) detail::build_signatures(d, r, sigs);
    std::vector<Signature> out;
    for (NodeRef r : detail::sorted_roots(d, sigs)) out.push_back(sigs[r.index].sig);
    return out;
}

inline CanonicalForm canonical_form(const SpecialDatum& d) {
    std::vector<detail::SigNode> sigs(d.size());
    for (NodeRef r : d.roots()) detail::build_signatures(d, r, sigs);
    std::vector<int> perm(d.dimension(), 0);
    int next = 1;
    for (NodeRef r : detail::sorted_roots(d, sigs)) detail::assign_labels(d, r, sigs, perm, next);

    DatumCandidate c;
    c.n = d.dimension();
    for (const auto& e : d.sets()) {
        SetEntry m;
        for (int x : e.elements) m.elements.push_back(perm[x - 1]);
        std::sort(m.elements.begin(), m.elements.end());
        m.weight = e.weight;
        c.sets.push_back(std::move(m));
    }
    return {SpecialDatum::from_candidate(std::move(c)), std::move(perm)};
}

inline bool is_isomorphic(const SpecialDatum& a, const SpecialDatum& b) {
    if (a.dimension() != b.dimension() || a.size() != b.size()) return false;
    auto sa = forest_signature(a);
    auto sb = forest_signature(b);
    return sa.size() == sb.size() && std::equal(sa.begin(), sa.end(), sb.begin());
}

/// Applies a ground-set relabelling: element i becomes perm[i-1].
inline SpecialDatum relabel(const SpecialDatum& d, const std::vector<int>& perm) {
    DatumCandidate c;
    c.n = d.dimension();
    for (const auto& e : d.sets()) {
        SetEntry m;
        for (int x : e.elements) m.elements.push_back(perm.at(x - 1));
        std::sort(m.elements.begin(), m.elements.end());
        m.weight = e.weight;
        c.sets.push_back(std::move(m));
    }
    return SpecialDatum::from_candidate(std::move(c));
}

}  // namespace aqci

#endif  // AQCI_CANONICAL_HPP
