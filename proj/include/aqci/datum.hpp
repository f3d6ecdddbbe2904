#ifndef AQCI_DATUM_HPP
#define AQCI_DATUM_HPP

// Special data: weighted laminar families (D, w) on the ground set {1..n}.
//
// A DatumCandidate is raw, possibly invalid input. validate() checks it against
// the five axioms and reports every violation it finds. A SpecialDatum can only
// be obtained from a candidate that validates, so every SpecialDatum in the
// program satisfies the axioms; all structural operations return new values.

#include "aqci/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqci {

/// One member J of D together with its weight w(J). Elements are 1-based.
struct SetEntry {
    std::vector<int> elements;
    BigInt weight;

    friend bool operator==(const SetEntry& a, const SetEntry& b) {
        return a.elements == b.elements && a.weight == b.weight;
    }
};

/// Serialization order: ascending (min element, size), then lexicographic.
inline bool entry_order(const SetEntry& a, const SetEntry& b) {
    int amin = a.elements.empty() ? 0 : a.elements.front();
    int bmin = b.elements.empty() ? 0 : b.elements.front();
    if (amin != bmin) return amin < bmin;
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    if (a.elements != b.elements) return a.elements < b.elements;
    return a.weight < b.weight;
}

struct DatumCandidate {
    long n = 0;
    std::vector<SetEntry> sets;
};

enum class ViolationKind {
    BadDimension,        // n < 1
    NoSets,              // empty set list
    EmptySet,
    ElementOutOfRange,
    RepeatedElement,     // an element listed twice inside one set
    NonpositiveWeight,
    DuplicateSet,
    MissingSingleton,    // axiom (1)
    NotLaminar,          // axiom (2)
    MaximalWeightNotOne, // axiom (3)
    WeightNotDecreasing, // axiom (4), w(J) > w(J')
    WeightNotDivisible,  // axiom (4), w(J') | w(J)
    SiblingWeightsDiffer,// axiom (5)
    BadChildPartition,   // children of a non-singleton member fail to partition it
};

inline const char* kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::BadDimension: return "bad_dimension";
        case ViolationKind::NoSets: return "no_sets";
        case ViolationKind::EmptySet: return "empty_set";
        case ViolationKind::ElementOutOfRange: return "element_out_of_range";
        case ViolationKind::RepeatedElement: return "repeated_element";
        case ViolationKind::NonpositiveWeight: return "nonpositive_weight";
        case ViolationKind::DuplicateSet: return "duplicate_set";
        case ViolationKind::MissingSingleton: return "axiom1_missing_singleton";
        case ViolationKind::NotLaminar: return "axiom2_not_laminar";
        case ViolationKind::MaximalWeightNotOne: return "axiom3_maximal_weight";
        case ViolationKind::WeightNotDecreasing: return "axiom4_not_decreasing";
        case ViolationKind::WeightNotDivisible: return "axiom4_not_divisible";
        case ViolationKind::SiblingWeightsDiffer: return "axiom5_sibling_weights";
        case ViolationKind::BadChildPartition: return "children_not_partition";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> sets;  // indices into the candidate's set list
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const {
        return std::any_of(violations.begin(), violations.end(),
                           [k](const Violation& v) { return v.kind == k; });
    }
};

namespace detail {

inline std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && is_subset(a, b);
}

inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

// For each set, the indices of the inclusion-maximal sets strictly inside it.
inline std::vector<std::vector<std::size_t>> strict_children(const std::vector<SetEntry>& sets) {
    std::vector<std::vector<std::size_t>> out(sets.size());
    for (std::size_t p = 0; p < sets.size(); ++p) {
        for (std::size_t c = 0; c < sets.size(); ++c) {
            if (!is_proper_subset(sets[c].elements, sets[p].elements)) continue;
            bool covered = false;
            for (std::size_t m = 0; m < sets.size() && !covered; ++m)
                covered = m != c && is_proper_subset(sets[c].elements, sets[m].elements) &&
                          is_proper_subset(sets[m].elements, sets[p].elements);
            if (!covered) out[p].push_back(c);
        }
    }
    return out;
}

}  // namespace detail

/// Checks every axiom and structural requirement, collecting all violations.
inline ValidationReport validate(const DatumCandidate& raw) {
    using detail::set_text;
    ValidationReport rep;
    auto add = [&](ViolationKind k, std::vector<std::size_t> idx, std::string msg) {
        rep.violations.push_back({k, std::move(idx), std::move(msg)});
    };
    if (raw.n < 1) add(ViolationKind::BadDimension, {}, "dimension must be >= 1, got " + std::to_string(raw.n));
    if (raw.sets.empty()) add(ViolationKind::NoSets, {}, "datum has no sets");

    // Per-entry shape checks; entries failing them are excluded from axiom checks.
    std::vector<std::vector<int>> norm(raw.sets.size());
    std::vector<bool> usable(raw.sets.size(), true);
    for (std::size_t i = 0; i < raw.sets.size(); ++i) {
        const auto& e = raw.sets[i];
        norm[i] = e.elements;
        std::sort(norm[i].begin(), norm[i].end());
        if (norm[i].empty()) {
            add(ViolationKind::EmptySet, {i}, "set #" + std::to_string(i) + " is empty");
            usable[i] = false;
        }
        for (int x : norm[i]) {
            if (x < 1 || x > raw.n) {
                add(ViolationKind::ElementOutOfRange, {i},
                    "element " + std::to_string(x) + " of " + set_text(norm[i]) + " outside [1," +
                        std::to_string(raw.n) + "]");
                usable[i] = false;
                break;
            }
        }
        if (std::adjacent_find(norm[i].begin(), norm[i].end()) != norm[i].end()) {
            add(ViolationKind::RepeatedElement, {i}, "set " + set_text(norm[i]) + " repeats an element");
            usable[i] = false;
        }
        if (e.weight <= 0) {
            add(ViolationKind::NonpositiveWeight, {i},
                "weight " + e.weight.get_str() + " of " + set_text(norm[i]) + " is not positive");
            usable[i] = false;
        }
    }

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < raw.sets.size(); ++i) {
        if (!usable[i]) continue;
        bool dup = false;
        for (std::size_t j : idx) {
            if (norm[j] == norm[i]) {
                add(ViolationKind::DuplicateSet, {j, i}, "set " + set_text(norm[i]) + " listed twice");
                dup = true;
                break;
            }
        }
        if (!dup) idx.push_back(i);
    }

    // Axiom (1)
    for (long k = 1; k <= raw.n; ++k) {
        bool found = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) {
            return norm[i].size() == 1 && norm[i][0] == k;
        });
        if (!found) add(ViolationKind::MissingSingleton, {}, "singleton {" + std::to_string(k) + "} missing");
    }

    // Axiom (2)
    bool laminar = true;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const auto& A = norm[idx[a]];
            const auto& B = norm[idx[b]];
            if (detail::is_subset(A, B) || detail::is_subset(B, A) || detail::disjoint(A, B)) continue;
            laminar = false;
            add(ViolationKind::NotLaminar, {idx[a], idx[b]},
                set_text(A) + " and " + set_text(B) + " overlap without nesting");
        }
    }

    std::vector<SetEntry> sub;
    for (std::size_t i : idx) sub.push_back({norm[i], raw.sets[i].weight});

    // Axiom (3)
    for (std::size_t a = 0; a < sub.size(); ++a) {
        bool maximal = std::none_of(sub.begin(), sub.end(), [&](const SetEntry& o) {
            return detail::is_proper_subset(sub[a].elements, o.elements);
        });
        if (maximal && sub[a].weight != 1)
            add(ViolationKind::MaximalWeightNotOne, {idx[a]},
                "maximal set " + set_text(sub[a].elements) + " has weight " + sub[a].weight.get_str());
    }

    // Axiom (4)
    for (std::size_t a = 0; a < sub.size(); ++a) {
        for (std::size_t b = 0; b < sub.size(); ++b) {
            if (!detail::is_proper_subset(sub[a].elements, sub[b].elements)) continue;
            const BigInt& wa = sub[a].weight;
            const BigInt& wb = sub[b].weight;
            if (!(wa > wb))
                add(ViolationKind::WeightNotDecreasing, {idx[a], idx[b]},
                    "w" + set_text(sub[a].elements) + "=" + wa.get_str() + " not > w" +
                        set_text(sub[b].elements) + "=" + wb.get_str());
            if (!mpz_divisible_p(wa.get_mpz_t(), wb.get_mpz_t()))
                add(ViolationKind::WeightNotDivisible, {idx[a], idx[b]},
                    "w" + set_text(sub[b].elements) + "=" + wb.get_str() + " does not divide w" +
                        set_text(sub[a].elements) + "=" + wa.get_str());
        }
    }

    // Axiom (5) and the derived child-partition property.
    auto kids = detail::strict_children(sub);
    for (std::size_t p = 0; p < sub.size(); ++p) {
        const auto& ch = kids[p];
        for (std::size_t c = 1; c < ch.size(); ++c) {
            if (sub[ch[c]].weight != sub[ch[0]].weight)
                add(ViolationKind::SiblingWeightsDiffer, {idx[ch[0]], idx[ch[c]]},
                    "children " + set_text(sub[ch[0]].elements) + " and " + set_text(sub[ch[c]].elements) +
                        " of " + set_text(sub[p].elements) + " have different weights");
        }
        if (!laminar || sub[p].elements.size() < 2) continue;
        std::vector<int> cover;
        for (std::size_t c : ch) cover.insert(cover.end(), sub[c].elements.begin(), sub[c].elements.end());
        std::sort(cover.begin(), cover.end());
        if (ch.size() < 2 || cover != sub[p].elements)
            add(ViolationKind::BadChildPartition, {idx[p]},
                "children of " + set_text(sub[p].elements) + " do not partition it into >= 2 blocks");
    }
    return rep;
}

class InvalidDatum : public std::invalid_argument {
public:
    explicit InvalidDatum(ValidationReport report)
        : std::invalid_argument(summarize(report)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    static std::string summarize(const ValidationReport& r) {
        std::string s = "invalid special datum:";
        for (const auto& v : r.violations) s += " [" + std::string(kind_name(v.kind)) + "] " + v.message + ";";
        return s;
    }
    ValidationReport report_;
};

/// Identifies one member J of a datum by its position in the sorted set list.
struct NodeRef {
    std::size_t index = 0;
    auto operator<=>(const NodeRef&) const = default;
};

/// A validated special datum. Sets are held in serialization order, and the
/// parent/child index is built once at construction.
class SpecialDatum {
public:
    static SpecialDatum from_candidate(DatumCandidate raw) {
        auto rep = validate(raw);
        if (!rep.ok()) throw InvalidDatum(std::move(rep));
        for (auto& e : raw.sets) std::sort(e.elements.begin(), e.elements.end());
        std::sort(raw.sets.begin(), raw.sets.end(), entry_order);
        return SpecialDatum(static_cast<int>(raw.n), std::move(raw.sets));
    }

    int dimension() const { return n_; }
    std::size_t size() const { return sets_.size(); }
    std::span<const SetEntry> sets() const { return sets_; }
    const SetEntry& entry(NodeRef j) const { return sets_.at(j.index); }
    const std::vector<int>& elements(NodeRef j) const { return entry(j).elements; }
    const BigInt& weight(NodeRef j) const { return entry(j).weight; }

    std::optional<NodeRef> parent(NodeRef j) const {
        auto p = parent_.at(j.index);
        if (p == npos) return std::nullopt;
        return NodeRef{p};
    }
    std::span<const NodeRef> children(NodeRef j) const { return children_.at(j.index); }
    std::span<const NodeRef> roots() const { return roots_; }

    std::optional<NodeRef> find(const std::vector<int>& elements) const {
        for (std::size_t i = 0; i < sets_.size(); ++i)
            if (sets_[i].elements == elements) return NodeRef{i};
        return std::nullopt;
    }
    NodeRef singleton(int i) const { return *find({i}); }

    std::vector<NodeRef> nodes() const {
        std::vector<NodeRef> out;
        for (std::size_t i = 0; i < sets_.size(); ++i) out.push_back({i});
        return out;
    }

    DatumCandidate candidate() const { return {n_, sets_}; }

    friend bool operator==(const SpecialDatum& a, const SpecialDatum& b) {
        return a.n_ == b.n_ && a.sets_ == b.sets_;
    }
    friend bool operator<(const SpecialDatum& a, const SpecialDatum& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::lexicographical_compare(a.sets_.begin(), a.sets_.end(), b.sets_.begin(), b.sets_.end(),
                                            entry_order);
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    SpecialDatum(int n, std::vector<SetEntry> sets) : n_(n), sets_(std::move(sets)) {
        parent_.assign(sets_.size(), npos);
        children_.resize(sets_.size());
        // The parent of J is the smallest member strictly containing it.
        for (std::size_t c = 0; c < sets_.size(); ++c) {
            for (std::size_t p = 0; p < sets_.size(); ++p) {
                if (!detail::is_proper_subset(sets_[c].elements, sets_[p].elements)) continue;
                if (parent_[c] == npos || sets_[p].elements.size() < sets_[parent_[c]].elements.size())
                    parent_[c] = p;
            }
        }
        for (std::size_t c = 0; c < sets_.size(); ++c) {
            if (parent_[c] == npos) roots_.push_back({c});
            else children_[parent_[c]].push_back({c});
        }
        // Sets are sorted by min element first, so these lists are already in
        // smallest-element order; sort anyway for clarity of contract.
        auto by_min = [this](NodeRef a, NodeRef b) {
            return sets_[a.index].elements.front() < sets_[b.index].elements.front();
        };
        std::sort(roots_.begin(), roots_.end(), by_min);
        for (auto& ch : children_) std::sort(ch.begin(), ch.end(), by_min);
    }

    int n_;
    std::vector<SetEntry> sets_;
    std::vector<std::size_t> parent_;
    std::vector<std::vector<NodeRef>> children_;
    std::vector<NodeRef> roots_;
};

// ---------------------------------------------------------------------------
// Structural operations

/// Members J' with J' directly below J, ordered by smallest element.
inline std::vector<NodeRef> children(const SpecialDatum& d, NodeRef j) {
    auto c = d.children(j);
    return {c.begin(), c.end()};
}

inline std::vector<NodeRef> maximal_elements(const SpecialDatum& d) {
    auto r = d.roots();
    return {r.begin(), r.end()};
}

inline bool is_connected(const SpecialDatum& d) { return d.roots().size() == 1; }

/// Common weight of the children of J (axiom 5). J must have children.
inline const BigInt& child_weight(const SpecialDatum& d, NodeRef j) {
    auto c = d.children(j);
    if (c.empty()) throw std::invalid_argument("member has no children");
    return d.weight(c.front());
}

/// The datum D_J on |J| points: members inside J, weights divided by w(J),
/// ground set relabelled to 1..|J| preserving order.
inline SpecialDatum restrict(const SpecialDatum& d, NodeRef j) {
    const auto& top = d.elements(j);
    const BigInt& wj = d.weight(j);
    DatumCandidate out;
    out.n = static_cast<long>(top.size());
    for (const auto& e : d.sets()) {
        if (!detail::is_subset(e.elements, top)) continue;
        SetEntry r;
        for (int x : e.elements)
            r.elements.push_back(static_cast<int>(std::lower_bound(top.begin(), top.end(), x) - top.begin()) + 1);
        r.weight = e.weight / wj;
        out.sets.push_back(std::move(r));
    }
    return SpecialDatum::from_candidate(std::move(out));
}

/// Connected components D_J for the maximal members J, in smallest-element order.
inline std::vector<SpecialDatum> connected_components(const SpecialDatum& d) {
    std::vector<SpecialDatum> out;
    for (NodeRef r : d.roots()) out.push_back(restrict(d, r));
    return out;
}

/// The datum D \ J: J is removed and members inside a child J_i of J have
/// their weight divided by w(J_i).
inline SpecialDatum reduce(const SpecialDatum& d, NodeRef j) {
    if (d.parent(j)) throw std::invalid_argument("reduce: member is not maximal");
    if (d.elements(j).size() < 2) throw std::invalid_argument("reduce: member is a singleton");
    const BigInt& r = child_weight(d, j);
    const auto& top = d.elements(j);
    DatumCandidate out;
    out.n = d.dimension();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i == j.index) continue;
        SetEntry e = d.sets()[i];
        if (detail::is_subset(e.elements, top)) e.weight /= r;
        out.sets.push_back(std::move(e));
    }
    return SpecialDatum::from_candidate(std::move(out));
}

/// The datum D^a: the unique maximal member keeps weight 1, every other weight
/// is multiplied by a.
inline SpecialDatum scale(const SpecialDatum& d, const BigInt& a) {
    if (!is_connected(d)) throw std::invalid_argument("scale: datum is not connected");
    if (a < 1) throw std::invalid_argument("scale: factor must be positive");
    DatumCandidate out = d.candidate();
    NodeRef root = d.roots().front();
    for (std::size_t i = 0; i < out.sets.size(); ++i)
        if (i != root.index) out.sets[i].weight *= a;
    return SpecialDatum::from_candidate(std::move(out));
}

}  // namespace aqci

#endif  // AQCI_DATUM_HPP
