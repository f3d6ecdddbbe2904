#ifndef AQCI_VERIFY_HPP
#define AQCI_VERIFY_HPP

// Exhaustive theorem checking over enumerated special data.
//
// Each datum gets the checklist C1..C13. Checks that need a multiplicity read
// off the Hilbert-Samuel oracle are "skip" when the oracle table did not
// stabilise within budget, and "na" when their hypothesis does not apply.
// Failures carry the values on both sides so they can be replayed.

#include "aqci/enumerate.hpp"
#include "aqci/serialize.hpp"

#include <json.hpp>

#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace aqci {

enum class Outcome { Pass, Fail, Skip, NotApplicable };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Skip: return "skip";
        case Outcome::NotApplicable: return "na";
    }
    return "?";
}

struct CheckOutcome {
    std::string id;
    std::string name;
    Outcome outcome = Outcome::Pass;
    nlohmann::json witness = nlohmann::json::object();
};

struct DatumRecord {
    SpecialDatum datum;
    InvariantSummary summary;
    MultiplicityResult mult;
    HilbertSamuelTable table;
    std::vector<CheckOutcome> checks;
    bool alpha_equals_beta_everywhere = false;

    bool failed() const {
        for (const auto& c : checks)
            if (c.outcome == Outcome::Fail) return true;
        return false;
    }
};

struct OutcomeTally {
    std::size_t pass = 0, fail = 0, skip = 0, na = 0;
    void add(Outcome o) {
        switch (o) {
            case Outcome::Pass: ++pass; break;
            case Outcome::Fail: ++fail; break;
            case Outcome::Skip: ++skip; break;
            case Outcome::NotApplicable: ++na; break;
        }
    }
};

struct LemmaGridResult {
    std::size_t points = 0;
    std::size_t equality_points = 0;
    std::vector<nlohmann::json> failures;
    bool ok() const { return failures.empty(); }
};

struct VerificationReport {
    EnumerationBudget budget;
    std::vector<DatumRecord> records;
    std::map<std::string, OutcomeTally> tallies;
    std::size_t failed_data = 0;
    std::size_t oracle_unstabilized = 0;
    std::size_t exact_results = 0;
    std::size_t interval_results = 0;
    std::size_t equality_without_alpha_beta = 0;  // e = alpha product but alpha != beta somewhere
    LemmaGridResult ceiling_lemma;
    LemmaGridResult concavity_lemma;

    bool all_pass() const { return failed_data == 0 && ceiling_lemma.ok() && concavity_lemma.ok(); }
};

inline const std::vector<std::pair<std::string, std::string>>& check_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"C1", "lct recursion equals lct LP"},
        {"C2", "group order recursion equals lattice index"},
        {"C3", "group order scaling |G(D^a)| = a^(n-1) |G(D)|"},
        {"C4", "embedding dimension vs lct"},
        {"C5", "e <= m(D) <= 2^(n-1), equality iff emb = 2n-1"},
        {"C6", "e <= 2^(n-ceil(lct)), equality iff emb = 2n-ceil(lct)"},
        {"C7", "e >= alpha product >= (1/|G|)(n/lct)^n"},
        {"C8", "volume-bound equality iff closure of a_D is a power of the maximal ideal"},
        {"C9", "alpha = beta everywhere implies e = alpha product"},
        {"C10", "e <= r e(D\\J), equality when lct(D) = lct(D\\J)/r"},
        {"C11", "e >= lct(D\\J) e(D\\J) when lct(D) = 1 > lct(D\\J)/r"},
        {"C12", "e multiplicative over connected components"},
        {"C13", "oracle agrees with mult_exact and lies within [lower, upper]"},
    };
    return catalog;
}

namespace detail {

inline std::string rat(const Rational& q) { return to_string(q); }

// Accumulates the conditions of one check.
class CheckBuilder {
public:
    CheckBuilder(std::string id) : id_(std::move(id)) {}

    void require(bool cond, const std::string& label) {
        if (!cond) failed_.push_back(label);
        evaluated_ = true;
    }
    void skip(const std::string& why) { skipped_.push_back(why); }
    void not_applicable() { na_ = true; }
    nlohmann::json& witness() { return witness_; }

    CheckOutcome finish() {
        CheckOutcome c;
        c.id = id_;
        for (const auto& [id, name] : check_catalog())
            if (id == id_) c.name = name;
        if (!failed_.empty()) {
            c.outcome = Outcome::Fail;
            witness_["failed"] = failed_;
        } else if (!skipped_.empty()) {
            c.outcome = Outcome::Skip;
            witness_["skipped"] = skipped_;
        } else if (na_ && !evaluated_) {
            c.outcome = Outcome::NotApplicable;
        } else {
            c.outcome = Outcome::Pass;
        }
        c.witness = std::move(witness_);
        return c;
    }

private:
    std::string id_;
    std::vector<std::string> failed_;
    std::vector<std::string> skipped_;
    bool na_ = false;
    bool evaluated_ = false;
    nlohmann::json witness_ = nlohmann::json::object();
};

}  // namespace detail

/// Oracle tables keyed by canonical form, shared across one suite run.
class OracleStore {
public:
    explicit OracleStore(OracleBudget budget) : budget_(budget) {}

    HilbertSamuelTable table(const SpecialDatum& d) {
        SpecialDatum key = canonical_form(d).datum;
        if (auto hit = cache_.find(key)) return *hit;
        auto t = mult_oracle(key, budget_);
        cache_.insert(key, t);
        return t;
    }

    std::optional<BigInt> e(const SpecialDatum& d) { return table(d).e; }

    const OracleBudget& budget() const { return budget_; }

private:
    OracleBudget budget_;
    MemoCache<SpecialDatum, HilbertSamuelTable> cache_;
};

/// Runs C1..C13 on one datum.
inline DatumRecord check_datum(const SpecialDatum& input, OracleStore& oracle) {
    using detail::rat;
    DatumRecord rec{canonical_form(input).datum, {}, {}, {}, {}, false};
    const SpecialDatum& d = rec.datum;
    const int n = d.dimension();
    rec.summary = summarize(d);
    rec.mult = mult_exact(d);
    rec.table = oracle.table(d);
    const auto& S = rec.summary;
    const std::optional<BigInt> e = rec.table.e;
    const Rational lct = S.lct;
    const BigInt ceil_lct = S.ceil_lct;
    const auto roots = maximal_elements(d);
    const bool connected = roots.size() == 1;
    const auto comps = connected_components(d);
    auto no_e = [&](detail::CheckBuilder& b) { b.skip("oracle not stabilised"); };

    // C1
    {
        detail::CheckBuilder b("C1");
        b.witness() = {{"recursion", rat(S.lct)}, {"lp", rat(S.lct_lp)}};
        b.require(S.lct == S.lct_lp, "lct recursion == lct LP");
        rec.checks.push_back(b.finish());
    }
    // C2
    {
        detail::CheckBuilder b("C2");
        b.witness() = {{"recursion", to_string(S.group_order)}, {"lattice", to_string(S.group_order_oracle)}};
        b.require(S.group_order == S.group_order_oracle, "|G| recursion == lattice index");
        rec.checks.push_back(b.finish());
    }
    // C3: on every connected component.
    {
        detail::CheckBuilder b("C3");
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : comps) {
            BigInt base = group_order_oracle(c);
            for (long a : {2L, 3L}) {
                BigInt scaled = group_order_oracle(scale(c, a));
                BigInt expect = pow(BigInt(a), static_cast<unsigned long>(c.dimension() - 1)) * base;
                rows.push_back({{"component", to_json(c)}, {"a", a}, {"scaled", to_string(scaled)},
                                {"expected", to_string(expect)}});
                b.require(scaled == expect, "|G(D^" + std::to_string(a) + ")| == a^(n-1)|G(D)|");
            }
        }
        b.witness()["cases"] = rows;
        rec.checks.push_back(b.finish());
    }
    // C4
    {
        detail::CheckBuilder b("C4");
        BigInt sum_comp = 0;
        for (const auto& c : comps) sum_comp += ceil(lct_datum(c));
        BigInt bound_comp = BigInt(2 * n) - sum_comp;
        BigInt bound = BigInt(2 * n) - ceil_lct;
        b.witness() = {{"emb", S.emb}, {"lct", rat(lct)}, {"2n-sum_ceil_components", to_string(bound_comp)},
                       {"2n-ceil_lct", to_string(bound)}, {"maximal", roots.size()}};
        b.require(BigInt(S.emb) <= bound_comp, "emb <= 2n - sum ceil lct(component)");
        b.require(bound_comp <= bound, "2n - sum ceil lct(component) <= 2n - ceil lct");
        b.require(lct >= Rational(static_cast<long>(roots.size())), "lct >= #maximal members");
        if (connected && n >= 2) {
            NodeRef root = roots.front();
            Rational r(child_weight(d, root));
            Rational L = lct_datum(reduce(d, root));
            BigInt sum_children = 0;
            bool children_tight = true;
            for (NodeRef c : d.children(root)) {
                auto dc = restrict(d, c);
                BigInt cc = ceil(lct_datum(dc));
                sum_children += cc;
                if (BigInt(embedding_dimension(dc)) != BigInt(2 * dc.dimension()) - cc) children_tight = false;
            }
            BigInt refined = BigInt(2 * n) - sum_children + 1;
            b.witness()["2n-sum_ceil_children+1"] = to_string(refined);
            b.require(BigInt(S.emb) <= refined, "emb <= 2n - sum ceil lct(D_Ji) + 1");
            b.require(refined <= bound, "2n - sum ceil lct(D_Ji) + 1 <= 2n - ceil lct");
            bool eq1 = BigInt(S.emb) == bound;
            bool eq2 = children_tight && sum_children - 1 == ceil_lct;
            b.require(eq1 == eq2, "emb = 2n - ceil lct  <=>  children tight and sum ceil lct(D_Ji) - 1 = ceil lct");
            if (lct == L / r && sum_children - 1 == ceil_lct) {
                b.require(r == 2, "ceiling coincidence forces r = 2");
                b.require(ceil(L) - ceil_lct == 1, "ceiling coincidence forces ceil lct(D\\J) - ceil lct = 1");
            }
        }
        rec.checks.push_back(b.finish());
    }
    // C5
    {
        detail::CheckBuilder b("C5");
        auto [lhs, rhs] = delta_sum_identity(d);
        BigInt two_n1 = pow(BigInt(2), static_cast<unsigned long>(n - 1));
        BigInt two_forest = pow(BigInt(2), static_cast<unsigned long>(rhs));
        b.witness() = {{"m_of_D", to_string(S.m_of_D)}, {"2^(n-1)", to_string(two_n1)}, {"emb", S.emb},
                       {"delta_sum", lhs}, {"n-maximal", rhs}};
        b.require(lhs == rhs, "sum (delta-1) == n - #maximal");
        if (connected) b.require(lhs == n - 1, "sum (delta-1) == n-1 for connected data");
        b.require(S.m_of_D <= two_forest, "m(D) <= 2^(n-#maximal)");
        b.require(S.m_of_D <= two_n1, "m(D) <= 2^(n-1)");
        if (e) {
            b.witness()["e"] = to_string(*e);
            b.require(*e <= S.m_of_D, "e <= m(D)");
            b.require((*e == two_n1) == (S.emb == 2 * n - 1), "e = 2^(n-1)  <=>  emb = 2n-1");
        } else {
            no_e(b);
        }
        rec.checks.push_back(b.finish());
    }
    // C6
    {
        detail::CheckBuilder b("C6");
        BigInt bound = lct_power_bound(d);
        b.witness() = {{"2^(n-ceil_lct)", to_string(bound)}, {"emb", S.emb}, {"2n-ceil_lct", to_string(BigInt(BigInt(2 * n) - ceil_lct))}};
        if (e) {
            b.witness()["e"] = to_string(*e);
            b.require(*e <= bound, "e <= 2^(n-ceil lct)");
            b.require((*e == bound) == (BigInt(S.emb) == BigInt(2 * n) - ceil_lct),
                      "e = 2^(n-ceil lct)  <=>  emb = 2n - ceil lct");
        } else {
            no_e(b);
        }
        rec.checks.push_back(b.finish());
    }
    // C7
    {
        detail::CheckBuilder b("C7");
        b.witness() = {{"alpha_product", rat(S.alpha_product)}, {"volume_bound", rat(S.volume_bound)}};
        b.require(S.alpha_product >= S.volume_bound, "alpha product >= (1/|G|)(n/lct)^n");
        if (e) {
            b.witness()["e"] = to_string(*e);
            b.require(Rational(*e) >= S.alpha_product, "e >= alpha product");
        } else {
            no_e(b);
        }
        rec.checks.push_back(b.finish());
    }
    // C8
    bool all_ab = true;
    for (const auto& [member, a] : S.alpha)
        if (a != S.beta.at(member)) all_ab = false;
    rec.alpha_equals_beta_everywhere = all_ab;
    {
        detail::CheckBuilder b("C8");
        auto q = find_closure_power(d);
        bool equal = S.alpha_product == S.volume_bound;
        b.witness() = {{"alpha_product", rat(S.alpha_product)}, {"volume_bound", rat(S.volume_bound)},
                       {"closure_power", q ? nlohmann::json(to_string(*q)) : nlohmann::json(nullptr)}};
        b.require(equal == q.has_value(), "alpha product = volume bound  <=>  closure is a power");
        if (q) {
            b.require(Rational(*q) * lct == Rational(n), "q * lct == n");
            bool weights_q = true;
            for (int i = 1; i <= n; ++i)
                if (d.weight(d.singleton(i)) != *q) weights_q = false;
            b.require(weights_q, "every singleton weight == q");
            b.require(all_ab, "alpha == beta for every member");
            if (e) b.require(Rational(*e) == S.alpha_product, "e == alpha product");
            else no_e(b);
        }
        rec.checks.push_back(b.finish());
    }
    // C9
    {
        detail::CheckBuilder b("C9");
        b.witness() = {{"alpha_eq_beta", all_ab}, {"alpha_product", rat(S.alpha_product)}};
        if (e) b.witness()["e"] = to_string(*e);
        if (all_ab) {
            if (e) b.require(Rational(*e) == S.alpha_product, "e == alpha product");
            else no_e(b);
        } else {
            b.not_applicable();
        }
        rec.checks.push_back(b.finish());
    }
    // C10, C11
    {
        detail::CheckBuilder b10("C10");
        detail::CheckBuilder b11("C11");
        if (connected && n >= 2) {
            NodeRef root = roots.front();
            auto reduced = reduce(d, root);
            Rational r(child_weight(d, root));
            Rational L = lct_datum(reduced);
            auto e_red = oracle.e(reduced);
            nlohmann::json w = {{"r", rat(r)}, {"lct_reduced", rat(L)}, {"lct", rat(lct)}};
            if (e) w["e"] = to_string(*e);
            if (e_red) w["e_reduced"] = to_string(*e_red);
            b10.witness() = w;
            b11.witness() = w;
            if (e && e_red) {
                b10.require(Rational(*e) <= r * Rational(*e_red), "e <= r e(D\\J)");
                if (lct == L / r) b10.require(Rational(*e) == r * Rational(*e_red), "e == r e(D\\J)");
            } else {
                no_e(b10);
            }
            if (lct == 1 && L / r < 1) {
                if (e && e_red) b11.require(Rational(*e) >= L * Rational(*e_red), "e >= lct(D\\J) e(D\\J)");
                else no_e(b11);
            } else {
                b11.not_applicable();
            }
        } else {
            b10.not_applicable();
            b11.not_applicable();
        }
        rec.checks.push_back(b10.finish());
        rec.checks.push_back(b11.finish());
    }
    // C12
    {
        detail::CheckBuilder b("C12");
        if (!connected) {
            BigInt prod = 1;
            bool all = true;
            nlohmann::json parts = nlohmann::json::array();
            for (const auto& c : comps) {
                auto ec = oracle.e(c);
                if (!ec) { all = false; parts.push_back(nullptr); continue; }
                parts.push_back(to_string(*ec));
                prod *= *ec;
            }
            b.witness() = {{"components", parts}};
            if (e) b.witness()["e"] = to_string(*e);
            if (e && all) b.require(*e == prod, "e == product of component e");
            else no_e(b);
        } else {
            b.not_applicable();
        }
        rec.checks.push_back(b.finish());
    }
    // C13
    {
        detail::CheckBuilder b("C13");
        Rational lo = mult_lower(d), hi = mult_upper(d);
        b.witness() = {{"status", rec.mult.exact() ? "exact" : "interval"},
                       {"lower", rat(rec.mult.lower)}, {"upper", rat(rec.mult.upper)},
                       {"bound_lower", rat(lo)}, {"bound_upper", rat(hi)}};
        b.require(lo <= hi, "mult_lower <= mult_upper");
        b.require(rec.mult.lower <= rec.mult.upper, "result interval nonempty");
        if (e) {
            b.witness()["e"] = to_string(*e);
            Rational ev(*e);
            if (rec.mult.exact()) b.require(*e == rec.mult.value, "oracle e == exact recursion value");
            b.require(rec.mult.lower <= ev && ev <= rec.mult.upper, "lower <= e <= upper");
            b.require(lo <= ev && ev <= hi, "mult_lower <= e <= mult_upper");
        } else {
            no_e(b);
        }
        rec.checks.push_back(b.finish());
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Standalone numeric lemmas

/// a <= 2^(ceil(b) - ceil(b/a)) for integer a in [2,12] and b in [a,20] on a
/// 1/4 grid, with equality exactly when a = 2 and ceil(b) - ceil(b/a) = 1.
inline LemmaGridResult ceiling_lemma_grid(long a_max = 12, long b_max = 20, long steps_per_unit = 4) {
    LemmaGridResult res;
    for (long a = 2; a <= a_max; ++a) {
        for (long num = a * steps_per_unit; num <= b_max * steps_per_unit; ++num) {
            Rational b = make_rational(num, steps_per_unit);
            BigInt gap = ceil(b) - ceil(b / Rational(a));
            ++res.points;
            bool ok = gap >= 0;
            BigInt rhs = ok ? pow(BigInt(2), static_cast<unsigned long>(to_int64(gap))) : BigInt(0);
            bool le = ok && BigInt(a) <= rhs;
            bool eq = ok && BigInt(a) == rhs;
            bool predicted = a == 2 && gap == 1;
            if (eq) ++res.equality_points;
            if (!le || eq != predicted)
                res.failures.push_back({{"a", a}, {"b", to_string(b)}, {"gap", to_string(gap)}});
        }
    }
    return res;
}

/// prod (x_i/c_i)^{x_i} >= (X/C)^X with X = sum x_i, C = sum c_i, equality iff
/// all x_i/c_i agree. Exponents are rational; both sides are raised to the
/// common denominator D of the x_i and compared exactly.
inline LemmaGridResult concavity_lemma_grid(int max_terms = 3) {
    const std::vector<Rational> grid = {make_rational(1, 2), make_rational(1), make_rational(3, 2),
                                        make_rational(2), make_rational(3)};
    LemmaGridResult res;
    for (int k = 2; k <= max_terms; ++k) {
        const std::size_t total = static_cast<std::size_t>(k) * 2;
        std::vector<std::size_t> idx(total, 0);
        for (;;) {
            std::vector<Rational> x, c;
            for (int i = 0; i < k; ++i) {
                x.push_back(grid[idx[static_cast<std::size_t>(i)]]);
                c.push_back(grid[idx[static_cast<std::size_t>(k + i)]]);
            }
            BigInt D = 1;
            for (const auto& xi : x) D = lcm(D, BigInt(xi.get_den()));
            Rational lhs = 1, X = 0, C = 0;
            BigInt P = 0;
            for (int i = 0; i < k; ++i) {
                BigInt p = Rational(x[i] * Rational(D)).get_num();
                lhs *= pow(x[i] / c[i], static_cast<unsigned long>(to_int64(p)));
                X += x[i];
                C += c[i];
                P += p;
            }
            Rational rhs = pow(X / C, static_cast<unsigned long>(to_int64(P)));
            bool proportional = true;
            for (int i = 1; i < k; ++i)
                if (x[i] / c[i] != x[0] / c[0]) proportional = false;
            ++res.points;
            if (lhs == rhs) ++res.equality_points;
            if (lhs < rhs || (lhs == rhs) != proportional) {
                nlohmann::json xs = nlohmann::json::array(), cs = nlohmann::json::array();
                for (int i = 0; i < k; ++i) {
                    xs.push_back(to_string(x[i]));
                    cs.push_back(to_string(c[i]));
                }
                res.failures.push_back({{"x", xs}, {"c", cs}});
            }
            std::size_t pos = 0;
            while (pos < total && ++idx[pos] == grid.size()) idx[pos++] = 0;
            if (pos == total) break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------

inline void tally(VerificationReport& rep) {
    rep.tallies.clear();
    for (const auto& [id, name] : check_catalog()) rep.tallies[id];
    rep.failed_data = rep.oracle_unstabilized = rep.exact_results = rep.interval_results = 0;
    rep.equality_without_alpha_beta = 0;
    for (const auto& r : rep.records) {
        for (const auto& c : r.checks) rep.tallies[c.id].add(c.outcome);
        if (r.failed()) ++rep.failed_data;
        if (!r.table.stabilized) ++rep.oracle_unstabilized;
        if (r.mult.exact()) ++rep.exact_results;
        else ++rep.interval_results;
        if (r.table.e && !r.alpha_equals_beta_everywhere && Rational(*r.table.e) == r.summary.alpha_product)
            ++rep.equality_without_alpha_beta;
    }
}

/// Runs the checklist over the enumeration. `jobs` > 1 checks data in
/// parallel; records stay in enumeration order, so output is independent of
/// scheduling.
inline VerificationReport run_suite(const EnumerationBudget& budget, unsigned jobs = 1) {
    VerificationReport rep;
    rep.budget = budget;
    auto data = enumerate(budget);
    OracleStore oracle(budget.oracle);
    std::vector<std::optional<DatumRecord>> slots(data.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < data.size(); ++i) slots[i] = check_datum(data[i], oracle);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < data.size();) slots[i] = check_datum(data[i], oracle);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& s : slots) rep.records.push_back(std::move(*s));
    rep.ceiling_lemma = ceiling_lemma_grid();
    rep.concavity_lemma = concavity_lemma_grid();
    tally(rep);
    return rep;
}

}  // namespace aqci

#endif  // AQCI_VERIFY_HPP
