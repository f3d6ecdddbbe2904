#ifndef AQCI_LCT_HPP
#define AQCI_LCT_HPP

// Log canonical thresholds of monomial ideals and of special data.
//
// For a monomial ideal a, lct(a) = sup{t : (1,...,1) in t Newt(a)}, computed
// here as 1/u* with u* = min{u : (u,...,u) in Newt(a)}. For a special datum
// the threshold of m_D equals that of a_D and also follows a structural
// recursion over connected components and D \ J; both routes are provided so
// they can be checked against each other.

#include "aqci/canonical.hpp"
#include "aqci/memo.hpp"
#include "aqci/monomial_ideal.hpp"
#include "aqci/simplex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aqci {

/// Proof-carrying LP answer: lambda are convex-combination weights on the
/// generators of the ideal (indices into MonomialIdeal::generators()).
struct LpCertificate {
    Rational value;
    std::map<std::size_t, Rational> coefficients;
};

namespace detail {

inline void check_point(const MonomialIdeal& a, const RationalVector& p) {
    if (static_cast<int>(p.size()) != a.dimension())
        throw std::invalid_argument("point dimension " + std::to_string(p.size()) + " differs from ideal dimension " +
                                    std::to_string(a.dimension()));
}

inline std::map<std::size_t, Rational> nonzero_prefix(const std::vector<Rational>& x, std::size_t k) {
    std::map<std::size_t, Rational> out;
    for (std::size_t i = 0; i < k; ++i)
        if (x[i] != 0) out.emplace(i, x[i]);
    return out;
}

// Builds rows  scale * sum_i lambda_i v_i[c] + extra_c + s_c = rhs_c  and
// sum_i lambda_i = 1 over variables (lambda_1..lambda_k, extra, s_1..s_n).
// `extra_coeff` is the coefficient of the single extra variable in every
// coordinate row.
inline Simplex<Rational> newton_lp(const MonomialIdeal& a, const Rational& scale, const RationalVector& rhs,
                                   const Rational& extra_coeff, const Rational& extra_cost) {
    const auto& gens = a.generators();
    const std::size_t k = gens.size();
    const std::size_t n = static_cast<std::size_t>(a.dimension());
    const std::size_t vars = k + 1 + n;
    std::vector<RationalVector> A;
    RationalVector b;
    for (std::size_t c = 0; c < n; ++c) {
        RationalVector row(vars, Rational(0));
        for (std::size_t i = 0; i < k; ++i) row[i] = scale * Rational(gens[i][c]);
        row[k] = extra_coeff;
        row[k + 1 + c] = 1;
        A.push_back(std::move(row));
        b.push_back(rhs[c]);
    }
    RationalVector conv(vars, Rational(0));
    for (std::size_t i = 0; i < k; ++i) conv[i] = 1;
    A.push_back(std::move(conv));
    b.push_back(1);
    RationalVector cost(vars, Rational(0));
    cost[k] = extra_cost;
    return Simplex<Rational>(std::move(A), std::move(b), std::move(cost));
}

}  // namespace detail

/// Whether p lies in Newt(a), i.e. some convex combination of generators is
/// dominated by p. On success the certificate carries the combination.
inline std::optional<LpCertificate> newton_certificate(const MonomialIdeal& a, const RationalVector& p) {
    detail::check_point(a, p);
    for (const auto& x : p)
        if (x < 0) return std::nullopt;
    auto sol = detail::newton_lp(a, 1, p, 0, 0).solve();
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    return LpCertificate{0, detail::nonzero_prefix(sol.x, a.generators().size())};
}

inline bool newton_contains(const MonomialIdeal& a, const RationalVector& p) {
    return newton_certificate(a, p).has_value();
}

/// Replays a certificate: lambda >= 0, sums to 1, and sum lambda_i v_i <= p.
inline bool certificate_dominates(const MonomialIdeal& a, const LpCertificate& cert, const RationalVector& p) {
    detail::check_point(a, p);
    Rational total(0);
    RationalVector point(p.size(), Rational(0));
    for (const auto& [i, lam] : cert.coefficients) {
        if (i >= a.generators().size() || lam < 0) return false;
        total += lam;
        for (std::size_t c = 0; c < p.size(); ++c) point[c] += lam * Rational(a.generators()[i][c]);
    }
    if (total != 1) return false;
    for (std::size_t c = 0; c < p.size(); ++c)
        if (point[c] > p[c]) return false;
    return true;
}

/// lct(a) with the optimal convex combination as certificate: the combination
/// is dominated by (1/lct, ..., 1/lct).
inline LpCertificate lct_lp_certified(const MonomialIdeal& a) {
    const std::size_t n = static_cast<std::size_t>(a.dimension());
    // minimise u subject to sum lambda_i v_i - u*1 + s = 0.
    auto sol = detail::newton_lp(a, 1, RationalVector(n, Rational(0)), -1, 1).solve();
    if (sol.status != LpStatus::Optimal || sol.objective <= 0)
        throw std::logic_error("lct LP did not reach a positive optimum");
    return {1 / sol.objective, detail::nonzero_prefix(sol.x, a.generators().size())};
}

inline Rational lct_lp(const MonomialIdeal& a) { return lct_lp_certified(a).value; }

/// Howald membership: x^m lies in the multiplier ideal J(a^t) iff m + (1..1)
/// is in the interior of t Newt(a). Since t Newt(a) is closed upward, that
/// holds iff m + (1..1) - eps (1..1) is in t Newt(a) for some eps > 0.
inline bool multiplier_membership(const MonomialIdeal& a, const Rational& t, const std::vector<BigInt>& m) {
    if (t <= 0) throw std::invalid_argument("multiplier_membership: t must be positive");
    if (static_cast<int>(m.size()) != a.dimension()) throw std::invalid_argument("multiplier_membership: dimension mismatch");
    RationalVector x;
    for (const auto& mi : m) {
        if (mi < 0) throw std::invalid_argument("multiplier_membership: negative exponent");
        x.emplace_back(Rational(mi) + 1);
    }
    // maximise eps subject to t*sum lambda_i v_i + eps*1 + s = x.
    auto sol = detail::newton_lp(a, t, x, 1, -1).solve();
    if (sol.status != LpStatus::Optimal) return false;
    return -sol.objective > 0;
}

inline std::size_t default_closure_ceiling() { return 1'000'000; }

/// Whether the integral closure of a equals (x_1..x_n)^q. Enumerates all
/// C(q+n-1, n-1) monomials of degree q; throws std::length_error past `ceiling`.
inline bool closure_is_power(const MonomialIdeal& a, const BigInt& q, std::size_t ceiling = default_closure_ceiling()) {
    if (q < 1) throw std::invalid_argument("closure_is_power: q must be positive");
    const int n = a.dimension();
    BigInt count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(to_int64(q)) + n - 1, n - 1);
    if (count > BigInt(std::to_string(ceiling)))
        throw std::length_error("closure_is_power: " + count.get_str() + " lattice points exceed ceiling " +
                                std::to_string(ceiling));
    // Newt(a) inside {sum >= q}.
    for (const auto& g : a.generators()) {
        BigInt s = 0;
        for (const auto& x : g) s += x;
        if (s < q) return false;
    }
    // Every degree-q monomial in Newt(a).
    const long qq = to_int64(q);
    std::vector<long> comp(n, 0);
    bool all = true;
    auto rec = [&](auto&& self, int pos, long left) -> void {
        if (!all) return;
        if (pos == n - 1) {
            comp[pos] = left;
            RationalVector p;
            for (long c : comp) p.emplace_back(c);
            if (!newton_contains(a, p)) all = false;
            return;
        }
        for (long v = left; v >= 0; --v) {
            comp[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, qq);
    return all;
}

// ---------------------------------------------------------------------------
// Structural recursion on special data

namespace detail {

inline MemoCache<SpecialDatum, Rational>& lct_cache() {
    static MemoCache<SpecialDatum, Rational> cache;
    return cache;
}

}  // namespace detail

inline Rational lct_datum(const SpecialDatum& d);

/// Threshold of a connected datum: 1 for a point, otherwise
/// max{1, lct(D \ J) / r} with r the common child weight under the root J.
inline Rational lct_connected(const SpecialDatum& d) {
    if (!is_connected(d)) throw std::invalid_argument("lct_connected: datum is not connected");
    if (d.dimension() == 1) return 1;
    SpecialDatum key = canonical_form(d).datum;
    if (auto hit = detail::lct_cache().find(key)) return *hit;
    NodeRef root = key.roots().front();
    Rational reduced = lct_datum(reduce(key, root));
    Rational value = reduced / Rational(child_weight(key, root));
    if (value < 1) value = 1;
    detail::lct_cache().insert(key, value);
    return value;
}

/// lct(m_D) by recursion: additive over connected components.
inline Rational lct_datum(const SpecialDatum& d) {
    if (is_connected(d)) return lct_connected(d);
    Rational total(0);
    for (const auto& c : connected_components(d)) total += lct_connected(c);
    return total;
}

/// Some(q) iff every singleton weight equals q and the closure of a_D is (x)^q.
inline std::optional<BigInt> find_closure_power(const SpecialDatum& d,
                                                std::size_t ceiling = default_closure_ceiling()) {
    const BigInt& q = d.weight(d.singleton(1));
    for (int i = 2; i <= d.dimension(); ++i)
        if (d.weight(d.singleton(i)) != q) return std::nullopt;
    if (!closure_is_power(monomial_ideal(d), q, ceiling)) return std::nullopt;
    return q;
}

}  // namespace aqci

#endif  // AQCI_LCT_HPP
