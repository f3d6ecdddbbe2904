#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace aqci;

namespace {

// Two-variable threshold by direct geometry: the diagonal meets Newt(a)
// either at a dominated generator or on a segment between two generators on
// opposite sides of the diagonal.
Rational lct_plane(const std::vector<std::pair<long, long>>& gens) {
    std::optional<Rational> best;
    auto take = [&](const Rational& u) { if (!best || u < *best) best = u; };
    for (auto [x, y] : gens) take(Rational(std::max(x, y)));
    for (auto [x1, y1] : gens) {
        for (auto [x2, y2] : gens) {
            long d1 = x1 - y1, d2 = x2 - y2;
            if (d1 <= 0 || d2 >= 0) continue;
            Rational lam = Rational(-d2) / Rational(d1 - d2);  // lam*d1 + (1-lam)*d2 = 0
            take(lam * x1 + (1 - lam) * x2);
        }
    }
    return 1 / *best;
}

MonomialIdeal plane_ideal(const std::vector<std::pair<long, long>>& gens) {
    std::vector<ExponentVector> v;
    for (auto [x, y] : gens) v.push_back({BigInt(x), BigInt(y)});
    return MonomialIdeal(2, v);
}

RationalVector point(std::initializer_list<long> xs) {
    RationalVector p;
    for (long x : xs) p.emplace_back(x);
    return p;
}

}  // namespace

TEST(Simplex, SmallOptimum) {
    // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
    Simplex<Rational> lp({{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {-1, -1, 0, 0});
    auto sol = lp.solve();
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(sol.objective, Rational(-14, 5));
    EXPECT_EQ(sol.x[0], Rational(8, 5));
    EXPECT_EQ(sol.x[1], Rational(6, 5));
}

TEST(Simplex, InfeasibleAndUnbounded) {
    EXPECT_EQ(Simplex<Rational>({{1, 1}}, {-1}, {0, 0}).solve().status, LpStatus::Infeasible);
    EXPECT_EQ(Simplex<Rational>({{1, -1}}, {0}, {-1, 0}).solve().status, LpStatus::Unbounded);
}

TEST(Simplex, RedundantRows) {
    Simplex<Rational> lp({{1, 1}, {2, 2}}, {1, 2}, {1, 2});
    auto sol = lp.solve();
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(sol.objective, 1);
}

TEST(Newton, Containment) {
    auto a = make_ideal(2, {{2, 0}, {0, 2}});
    auto cert = newton_certificate(a, point({1, 1}));
    ASSERT_TRUE(cert);
    EXPECT_TRUE(certificate_dominates(a, *cert, point({1, 1})));
    EXPECT_EQ(cert->coefficients.size(), 2u);
    EXPECT_FALSE(newton_contains(a, {Rational(1, 2), Rational(1, 2)}));
    for (const auto& g : a.generators())
        EXPECT_TRUE(newton_contains(a, {Rational(g[0]), Rational(g[1])}));
    EXPECT_THROW(newton_contains(a, point({1, 1, 1})), std::invalid_argument);
}

TEST(LctLp, Examples) {
    EXPECT_EQ(lct_lp(make_ideal(3, {{1, 1, 1}})), 1);
    EXPECT_EQ(lct_lp(make_ideal(2, {{1, 0}, {0, 1}})), 2);
    EXPECT_EQ(lct_lp(make_ideal(2, {{2, 0}, {0, 3}})), Rational(5, 6));
    EXPECT_EQ(lct_plane({{2, 0}, {0, 3}}), Rational(5, 6));
}

TEST(LctLp, CertificateReplays) {
    for (const auto& d : enumerate({4, 3, {}})) {
        auto a = monomial_ideal(d);
        auto cert = lct_lp_certified(a);
        RationalVector diag(static_cast<std::size_t>(d.dimension()), 1 / cert.value);
        EXPECT_TRUE(certificate_dominates(a, cert, diag));
        // No point strictly below the diagonal optimum is in Newt(a).
        RationalVector below(diag.size(), (1 / cert.value) * Rational(99, 100));
        EXPECT_FALSE(newton_contains(a, below));
    }
}

TEST(LctLpProperty, AgreesWithPlaneGeometry) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coord(0, 9), count(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<long, long>> gens;
        long k = count(rng);
        while (static_cast<long>(gens.size()) < k) {
            std::pair<long, long> g{coord(rng), coord(rng)};
            if (g.first + g.second == 0) continue;
            gens.push_back(g);
        }
        EXPECT_EQ(lct_lp(plane_ideal(gens)), lct_plane(gens)) << "trial " << trial;
    }
}

TEST(LctDatum, Examples) {
    EXPECT_EQ(lct_datum(fixtures::cyclic(3, 2)), Rational(3, 2));
    EXPECT_EQ(lct_lp(monomial_ideal(fixtures::cyclic(3, 2))), Rational(3, 2));
    for (long a = 2; a <= 5; ++a) {
        EXPECT_EQ(lct_datum(fixtures::two_pairs(a, a)), 2);
        EXPECT_EQ(lct_datum(fixtures::two_pairs(a, a + 1)), 2);
    }
    EXPECT_EQ(lct_datum(fixtures::point()), 1);
}

TEST(LctDatumProperty, RecursionMatchesLp) {
    for (const auto& d : enumerate({4, 3, {}}))
        EXPECT_EQ(lct_datum(d), lct_lp(monomial_ideal(d))) << to_json(d);
}

TEST(LctDatumProperty, BoundsAndAdditivity) {
    for (const auto& d : enumerate({4, 3, {}})) {
        Rational l = lct_datum(d);
        EXPECT_GE(l, Rational(static_cast<long>(d.roots().size())));
        EXPECT_LE(l, Rational(d.dimension()));
        Rational sum = 0;
        for (const auto& c : connected_components(d)) sum += lct_datum(c);
        EXPECT_EQ(sum, l);
    }
}

TEST(Multiplier, Examples) {
    auto a = make_ideal(2, {{2, 0}, {0, 2}});
    EXPECT_TRUE(multiplier_membership(a, 1, {BigInt(1), BigInt(0)}));
    EXPECT_FALSE(multiplier_membership(a, 1, {BigInt(0), BigInt(0)}));
    EXPECT_TRUE(multiplier_membership(a, Rational(1, 2), {BigInt(0), BigInt(0)}));
    EXPECT_THROW(multiplier_membership(a, 0, {BigInt(0), BigInt(0)}), std::invalid_argument);
    EXPECT_THROW(multiplier_membership(a, 1, {BigInt(0)}), std::invalid_argument);
}

// 1 lies in J(a^t) exactly for t < lct(a).
TEST(MultiplierProperty, UnitThresholdIsLct) {
    for (const auto& d : enumerate({3, 3, {}})) {
        auto a = monomial_ideal(d);
        Rational l = lct_lp(a);
        std::vector<BigInt> zero(static_cast<std::size_t>(d.dimension()), BigInt(0));
        EXPECT_FALSE(multiplier_membership(a, l, zero));
        EXPECT_TRUE(multiplier_membership(a, l * Rational(9, 10), zero));
        EXPECT_FALSE(multiplier_membership(a, l * Rational(11, 10), zero));
    }
}

TEST(Closure, Examples) {
    EXPECT_TRUE(closure_is_power(make_ideal(3, {{1, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 2));
    EXPECT_FALSE(closure_is_power(make_ideal(3, {{1, 1, 1}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}}), 4));
    EXPECT_TRUE(closure_is_power(make_ideal(2, {{1, 0}, {0, 1}}), 1));
    EXPECT_FALSE(closure_is_power(make_ideal(2, {{2, 0}, {0, 3}}), 2));
    EXPECT_THROW(closure_is_power(make_ideal(2, {{1, 0}, {0, 1}}), 0), std::invalid_argument);
    EXPECT_THROW(closure_is_power(make_ideal(6, {{9, 0, 0, 0, 0, 0}}), 500, 1000), std::length_error);
}

TEST(Closure, FindPower) {
    EXPECT_EQ(find_closure_power(fixtures::cyclic(3, 2)), BigInt(2));
    EXPECT_FALSE(find_closure_power(fixtures::cyclic(3, 4)));
    EXPECT_EQ(find_closure_power(fixtures::point()), BigInt(1));
    EXPECT_EQ(find_closure_power(fixtures::two_pairs(2, 2)), BigInt(2));
    EXPECT_FALSE(find_closure_power(fixtures::two_pairs(2, 3)));
}

// Closure is m^q iff every degree-q lattice point is in Newt and no generator
// has degree below q. For the cyclic family this reduces to a <= n.
TEST(ClosureProperty, CyclicFamily) {
    for (int n = 2; n <= 4; ++n)
        for (long a = 2; a <= 6; ++a)
            EXPECT_EQ(find_closure_power(fixtures::cyclic(n, a)).has_value(), a <= n) << "n=" << n << " a=" << a;
}
