#ifndef AQCI_MULTIPLICITY_HPP
#define AQCI_MULTIPLICITY_HPP

// Hilbert-Samuel multiplicity e(R_D) of the invariant ring at its maximal
// ideal.
//
// mult_exact applies the reduction recursion where it is known to be exact and
// otherwise returns a certified integer interval built from the upper and
// lower bounds. mult_oracle is independent of all of that: it counts
// monomials of the semigroup ring directly and reads e off the n-th finite
// difference of k -> length(R/m^k).

#include "aqci/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace aqci {

enum class MultiplicityStatus { Exact, Interval };

struct TraceStep {
    std::string rule;           // short rule id, e.g. "cover_equality"
    std::vector<int> member;    // the member J the rule was applied at (empty for whole-datum rules)
    std::string formula;        // the identity or bound used
};

struct MultiplicityResult {
    MultiplicityStatus status = MultiplicityStatus::Interval;
    BigInt value;               // meaningful when Exact
    Rational lower;
    Rational upper;
    std::vector<TraceStep> trace;

    bool exact() const { return status == MultiplicityStatus::Exact; }
};

// ---------------------------------------------------------------------------
// Bounds

inline Rational mult_upper(const SpecialDatum& d);
inline Rational mult_lower(const SpecialDatum& d);

/// 2^{n - ceil(lct)}.
inline BigInt lct_power_bound(const SpecialDatum& d) {
    BigInt exp = BigInt(d.dimension()) - ceil(lct_datum(d));
    return pow(BigInt(2), static_cast<unsigned long>(to_int64(exp)));
}

/// Smallest applicable upper bound: m(D), 2^{n-ceil(lct)}, r e(D\J) for a
/// connected datum, and the product over components otherwise.
inline Rational mult_upper(const SpecialDatum& d) {
    if (d.dimension() == 1) return 1;
    Rational best(m_of_D(d));
    auto consider = [&best](const Rational& v) { if (v < best) best = v; };
    consider(Rational(lct_power_bound(d)));
    if (is_connected(d)) {
        NodeRef root = d.roots().front();
        consider(Rational(child_weight(d, root)) * mult_upper(reduce(d, root)));
    } else {
        Rational p = 1;
        for (const auto& c : connected_components(d)) p *= mult_upper(c);
        consider(p);
    }
    return best;
}

/// Largest applicable lower bound: the alpha product, (1/|G|)(n/lct)^n, the
/// reduction bounds r e(D\J) (when lct(D) = lct(D\J)/r) or lct(D\J) e(D\J)
/// (when lct(D) = 1 > lct(D\J)/r), and the product over components.
inline Rational mult_lower(const SpecialDatum& d) {
    if (d.dimension() == 1) return 1;
    Rational best = alpha_product(d);
    auto consider = [&best](const Rational& v) { if (v > best) best = v; };
    consider(group_volume_bound(d));
    if (is_connected(d)) {
        NodeRef root = d.roots().front();
        auto reduced = reduce(d, root);
        Rational L = lct_datum(reduced);
        Rational r(child_weight(d, root));
        consider((L / r >= 1 ? r : L) * mult_lower(reduced));
    } else {
        Rational p = 1;
        for (const auto& c : connected_components(d)) p *= mult_lower(c);
        consider(p);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Recursion

namespace detail {

inline MultiplicityResult exact_result(const BigInt& v, std::vector<TraceStep> trace) {
    MultiplicityResult r;
    r.status = MultiplicityStatus::Exact;
    r.value = v;
    r.lower = Rational(v);
    r.upper = Rational(v);
    r.trace = std::move(trace);
    return r;
}

// Tightens [lower, upper] to integers, intersects with the whole-datum bounds
// and promotes to Exact when the interval closes.
inline MultiplicityResult settle_interval(const SpecialDatum& d, Rational lower, Rational upper,
                                          std::vector<TraceStep> trace) {
    Rational bl = mult_lower(d);
    Rational bu = mult_upper(d);
    if (bl > lower) lower = bl;
    if (bu < upper) upper = bu;
    MultiplicityResult r;
    r.lower = Rational(ceil(lower));
    r.upper = Rational(floor(upper));
    r.trace = std::move(trace);
    r.trace.push_back({"bounds", {}, "ceil(max lower bounds) <= e <= floor(min upper bounds)"});
    if (r.lower == r.upper) {
        r.status = MultiplicityStatus::Exact;
        r.value = r.lower.get_num();
    }
    return r;
}

inline void append(std::vector<TraceStep>& to, const std::vector<TraceStep>& from) {
    to.insert(to.end(), from.begin(), from.end());
}

// Trace members are reported in the coordinates of the datum passed to
// mult_exact; sub-results are computed on relabelled restrictions, so their
// member lists are mapped back through `labels` (labels[i-1] = original element).
inline std::vector<TraceStep> lift_trace(std::vector<TraceStep> t, const std::vector<int>& labels) {
    for (auto& s : t)
        for (auto& x : s.member) x = labels[x - 1];
    return t;
}

}  // namespace detail

inline MultiplicityResult mult_exact(const SpecialDatum& d) {
    if (d.dimension() == 1) return detail::exact_result(1, {{"point", {1}, "e = 1"}});

    if (!is_connected(d)) {
        std::vector<TraceStep> trace;
        BigInt value = 1;
        Rational lower = 1, upper = 1;
        bool all_exact = true;
        for (NodeRef root : d.roots()) {
            auto sub = mult_exact(restrict(d, root));
            detail::append(trace, detail::lift_trace(sub.trace, d.elements(root)));
            all_exact = all_exact && sub.exact();
            value *= sub.value;
            lower *= sub.lower;
            upper *= sub.upper;
        }
        trace.push_back({"component_product", {}, "e(D) = prod e(D_J) over maximal J"});
        if (all_exact) return detail::exact_result(value, std::move(trace));
        return detail::settle_interval(d, lower, upper, std::move(trace));
    }

    NodeRef root = d.roots().front();
    const auto& top = d.elements(root);
    auto reduced = reduce(d, root);
    Rational L = lct_datum(reduced);
    BigInt r = child_weight(d, root);
    auto sub = mult_exact(reduced);
    std::vector<TraceStep> trace = sub.trace;

    if (L / Rational(r) >= 1) {
        trace.push_back({"cover_equality", top, "lct(D) = lct(D\\J)/r  =>  e(D) = r e(D\\J)"});
        if (sub.exact()) return detail::exact_result(r * sub.value, std::move(trace));
        return detail::settle_interval(d, Rational(r) * sub.lower, Rational(r) * sub.upper, std::move(trace));
    }

    auto kids = d.children(root);
    bool singleton_children =
        std::all_of(kids.begin(), kids.end(), [&](NodeRef c) { return d.elements(c).size() == 1; });
    if (singleton_children) {
        BigInt n = d.dimension();
        return detail::exact_result(r < n ? r : n,
                                    {{"hypersurface", top, "Y^r = x_1...x_n  =>  e = min{r, n}"}});
    }

    trace.push_back({"cover_strict", top, "lct(D) = 1 > lct(D\\J)/r  =>  lct(D\\J) e(D\\J) <= e(D) <= r e(D\\J)"});
    return detail::settle_interval(d, L * sub.lower, Rational(r) * sub.upper, std::move(trace));
}

// ---------------------------------------------------------------------------
// Hilbert-Samuel oracle

struct OracleBudget {
    long k_max = 12;
    std::size_t point_ceiling = 5'000'000;
};

struct HilbertSamuelTable {
    int n = 0;
    std::vector<BigInt> values;       // values[k-1] = length(R/m^k), k = 1..K
    std::vector<BigInt> differences;  // n-th finite differences of values
    bool stabilized = false;
    std::optional<BigInt> e;
    bool budget_exhausted = false;
    std::size_t points = 0;           // semigroup points examined
};

namespace detail {

using Point = std::vector<std::int64_t>;

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : p) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct OracleAbort {};

// Longest generator-count among representations s = sum c_J g_J, or -1 when
// s is not in the semigroup. Memoised over the points visited.
class LongestDecomposition {
public:
    LongestDecomposition(std::vector<Point> gens, std::size_t ceiling) : gens_(std::move(gens)), ceiling_(ceiling) {}

    long operator()(const Point& s) {
        if (std::all_of(s.begin(), s.end(), [](auto x) { return x == 0; })) return 0;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        long best = -1;
        Point rest(s.size());
        for (const auto& g : gens_) {
            bool fits = true;
            for (std::size_t i = 0; i < s.size() && fits; ++i) {
                rest[i] = s[i] - g[i];
                fits = rest[i] >= 0;
            }
            if (!fits) continue;
            long v = (*this)(rest);
            if (v >= 0 && v + 1 > best) best = v + 1;
        }
        if (memo_.size() >= ceiling_) throw OracleAbort{};
        memo_.emplace(s, best);
        return best;
    }

    std::size_t size() const { return memo_.size(); }

private:
    std::vector<Point> gens_;
    std::size_t ceiling_;
    std::unordered_map<Point, long, PointHash> memo_;
};

}  // namespace detail

/// Tabulates length(R_D / m_D^k) for k = 1..k_max from the semigroup S
/// generated by the exponent vectors g_J = w(J) chi_J:
///   length(R/m^k) = #{s in S : L(s) <= k-1},
/// where L(s) is the largest number of generators in a representation of s.
/// Every such s is a sum of at most k_max-1 generators, so those sums are
/// enumerated and L evaluated on each. e is the common value of the last
/// three n-th differences; otherwise the table is reported unstabilised.
inline HilbertSamuelTable mult_oracle(const SpecialDatum& d, const OracleBudget& budget = {}) {
    if (budget.k_max < 1 || budget.point_ceiling < 1) throw std::invalid_argument("oracle budget must be positive");
    HilbertSamuelTable table;
    table.n = d.dimension();
    const auto n = static_cast<std::size_t>(d.dimension());

    std::vector<detail::Point> gens;
    for (const auto& e : d.sets()) {
        detail::Point g(n, 0);
        for (int x : e.elements) g[x - 1] = to_int64(e.weight);
        gens.push_back(std::move(g));
    }

    const long depth = budget.k_max - 1;
    std::unordered_map<detail::Point, long, detail::PointHash> reach;  // point -> L(point)
    detail::LongestDecomposition longest(gens, budget.point_ceiling);
    try {
        std::vector<detail::Point> frontier{detail::Point(n, 0)};
        reach.emplace(frontier.front(), 0);
        for (long layer = 1; layer <= depth; ++layer) {
            std::vector<detail::Point> next;
            for (const auto& p : frontier) {
                for (const auto& g : gens) {
                    detail::Point q(p);
                    for (std::size_t i = 0; i < n; ++i) q[i] += g[i];
                    if (reach.contains(q)) continue;
                    reach.emplace(q, -1);
                    next.push_back(std::move(q));
                    if (reach.size() >= budget.point_ceiling) throw detail::OracleAbort{};
                }
            }
            frontier = std::move(next);
        }
        for (auto& [p, l] : reach) l = longest(p);
    } catch (const detail::OracleAbort&) {
        table.budget_exhausted = true;
        table.points = reach.size() + longest.size();
        return table;
    }
    table.points = reach.size() + longest.size();

    std::vector<BigInt> counts(static_cast<std::size_t>(budget.k_max), BigInt(0));
    for (const auto& [p, l] : reach)
        for (long k = std::max<long>(l + 1, 1); k <= budget.k_max; ++k) counts[static_cast<std::size_t>(k - 1)] += 1;
    table.values = std::move(counts);

    std::vector<BigInt> diff = table.values;
    for (std::size_t step = 0; step < n && !diff.empty(); ++step) {
        std::vector<BigInt> next;
        for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
        diff = std::move(next);
    }
    table.differences = diff;
    if (diff.size() >= 3) {
        const auto& a = diff[diff.size() - 1];
        if (a > 0 && a == diff[diff.size() - 2] && a == diff[diff.size() - 3]) {
            table.stabilized = true;
            table.e = a;
        }
    }
    return table;
}

}  // namespace aqci

#endif  // AQCI_MULTIPLICITY_HPP
