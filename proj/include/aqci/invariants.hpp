#ifndef AQCI_INVARIANTS_HPP
#define AQCI_INVARIANTS_HPP

// Discrete invariants of a special datum: embedding dimension, child counts
// and their product m(D), alpha/beta, and the order of the group G_D.
//
// G_D is handled additively: the diagonal matrix with zeta_w at i and
// zeta_w^{-1} at j is the vector (e_i - e_j)/w in (Q/Z)^n. The group order is
// available both from the reduction recursion and as the index [L : Z^n] of
// the lattice L spanned by Z^n and the generator vectors.

#include "aqci/hermite.hpp"
#include "aqci/lct.hpp"

#include <map>
#include <utility>
#include <vector>

namespace aqci {

inline long embedding_dimension(const SpecialDatum& d) { return static_cast<long>(d.size()); }

/// Number of members directly below J.
inline long delta(const SpecialDatum& d, NodeRef j) { return static_cast<long>(d.children(j).size()); }

/// Product of delta(J) over the members with |J| >= 2 (1 when there are none).
inline BigInt m_of_D(const SpecialDatum& d) {
    BigInt m = 1;
    for (NodeRef j : d.nodes())
        if (d.elements(j).size() >= 2) m *= delta(d, j);
    return m;
}

/// (sum over |J|>=2 of (delta(J)-1), n - #maximal members). Both sides count
/// the same forest edges, so they agree for every datum; for a connected datum
/// the right side is n-1.
inline std::pair<long, long> delta_sum_identity(const SpecialDatum& d) {
    long lhs = 0;
    for (NodeRef j : d.nodes())
        if (d.elements(j).size() >= 2) lhs += delta(d, j) - 1;
    return {lhs, d.dimension() - static_cast<long>(d.roots().size())};
}

/// |G_D| by the reduction recursion: multiplicative over components, and
/// r^{n-1} |G_{D\J}| for a connected datum with root J and child weight r.
inline BigInt group_order(const SpecialDatum& d) {
    if (!is_connected(d)) {
        BigInt g = 1;
        for (const auto& c : connected_components(d)) g *= group_order(c);
        return g;
    }
    if (d.dimension() == 1) return 1;
    NodeRef root = d.roots().front();
    return pow(child_weight(d, root), static_cast<unsigned long>(d.dimension() - 1)) * group_order(reduce(d, root));
}

/// (e_i - e_j)/w(J1) for every member J, every ordered pair of distinct
/// children J1 != J2 of J, i in J1 and j in J2. Redundant on purpose.
inline std::vector<RationalVector> group_generators(const SpecialDatum& d) {
    std::vector<RationalVector> out;
    const auto n = static_cast<std::size_t>(d.dimension());
    for (NodeRef j : d.nodes()) {
        auto kids = d.children(j);
        for (NodeRef a : kids) {
            for (NodeRef b : kids) {
                if (a == b) continue;
                Rational inv = 1 / Rational(d.weight(a));
                for (int i : d.elements(a)) {
                    for (int k : d.elements(b)) {
                        RationalVector g(n, Rational(0));
                        g[i - 1] = inv;
                        g[k - 1] = -inv;
                        out.push_back(std::move(g));
                    }
                }
            }
        }
    }
    return out;
}

/// |G_D| as the lattice index [Z^n + sum Z g : Z^n], via Hermite reduction of
/// the scaled generator rows: index = M^n / det(M L).
inline BigInt group_order_oracle(const SpecialDatum& d) {
    auto gens = group_generators(d);
    const auto n = static_cast<std::size_t>(d.dimension());
    BigInt M = 1;
    for (const auto& g : gens)
        for (const auto& x : g) M = lcm(M, BigInt(x.get_den()));
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> r(n, BigInt(0));
        r[i] = M;
        rows.push_back(std::move(r));
    }
    for (const auto& g : gens) {
        std::vector<BigInt> r;
        for (const auto& x : g) {
            Rational scaled = x * Rational(M);
            r.push_back(scaled.get_num());
        }
        rows.push_back(std::move(r));
    }
    BigInt det = lattice_determinant(std::move(rows));
    return pow(M, static_cast<unsigned long>(n)) / det;
}

/// alpha(D) = min{lct(D \ J), r} for a connected datum of dimension >= 2 with
/// root J and child weight r; 1 for a point.
inline Rational alpha(const SpecialDatum& c) {
    if (!is_connected(c)) throw std::invalid_argument("alpha: datum is not connected");
    if (c.dimension() == 1) return 1;
    NodeRef root = c.roots().front();
    Rational reduced = lct_datum(reduce(c, root));
    Rational r(child_weight(c, root));
    return reduced < r ? reduced : r;
}

/// beta(D) = r, the child weight under the root; 1 for a point.
inline Rational beta(const SpecialDatum& c) {
    if (!is_connected(c)) throw std::invalid_argument("beta: datum is not connected");
    if (c.dimension() == 1) return 1;
    return Rational(child_weight(c, c.roots().front()));
}

/// Product of alpha(D_J) over every member J of D.
inline Rational alpha_product(const SpecialDatum& d) {
    Rational p = 1;
    for (NodeRef j : d.nodes())
        if (d.elements(j).size() >= 2) p *= alpha(restrict(d, j));
    return p;
}

/// (1/|G_D|) (n / lct(m_D))^n.
inline Rational group_volume_bound(const SpecialDatum& d) {
    Rational ratio = Rational(d.dimension()) / lct_datum(d);
    return pow(ratio, static_cast<unsigned long>(d.dimension())) / Rational(group_order(d));
}

struct InvariantSummary {
    int n = 0;
    long emb = 0;
    std::map<std::vector<int>, long> delta;      // members with |J| >= 2
    BigInt m_of_D;
    std::map<std::vector<int>, Rational> alpha;  // alpha(D_J) for every member
    std::map<std::vector<int>, Rational> beta;
    BigInt group_order;
    BigInt group_order_oracle;
    Rational lct;
    Rational lct_lp;
    BigInt ceil_lct;
    Rational alpha_product;
    Rational volume_bound;
};

inline InvariantSummary summarize(const SpecialDatum& d) {
    InvariantSummary s;
    s.n = d.dimension();
    s.emb = embedding_dimension(d);
    for (NodeRef j : d.nodes()) {
        if (d.elements(j).size() >= 2) s.delta[d.elements(j)] = delta(d, j);
        auto c = restrict(d, j);
        s.alpha[d.elements(j)] = alpha(c);
        s.beta[d.elements(j)] = beta(c);
    }
    s.m_of_D = m_of_D(d);
    s.group_order = group_order(d);
    s.group_order_oracle = group_order_oracle(d);
    s.lct = lct_datum(d);
    s.lct_lp = lct_lp(monomial_ideal(d));
    s.ceil_lct = ceil(s.lct);
    s.alpha_product = alpha_product(d);
    s.volume_bound = group_volume_bound(d);
    return s;
}

}  // namespace aqci

#endif  // AQCI_INVARIANTS_HPP
