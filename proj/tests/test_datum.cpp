#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace aqci;
using fixtures::candidate;
using fixtures::datum;
using fixtures::members;
using fixtures::weights;

TEST(Validate, AcceptsSmallestDatum) {
    EXPECT_TRUE(validate(candidate(1, {{{1}, 1}})).ok());
}

TEST(Validate, AcceptsPairWithEqualWeights) {
    EXPECT_TRUE(validate(candidate(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}})).ok());
}

TEST(Validate, RejectsUnequalSiblings) {
    auto r = validate(candidate(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 3}}));
    EXPECT_TRUE(r.has(ViolationKind::SiblingWeightsDiffer));
}

TEST(Validate, RejectsMaximalWeightOtherThanOne) {
    auto r = validate(candidate(2, {{{1, 2}, 2}, {{1}, 4}, {{2}, 4}}));
    EXPECT_TRUE(r.has(ViolationKind::MaximalWeightNotOne));
}

TEST(Validate, RejectsMissingSingleton) {
    auto r = validate(candidate(2, {{{1, 2}, 1}, {{1}, 2}}));
    EXPECT_TRUE(r.has(ViolationKind::MissingSingleton));
}

TEST(Validate, RejectsCrossingSets) {
    auto r = validate(candidate(3, {{{1, 2}, 1}, {{2, 3}, 1}, {{1}, 2}, {{2}, 2}, {{3}, 2}}));
    EXPECT_TRUE(r.has(ViolationKind::NotLaminar));
}

TEST(Validate, RejectsNonDivisibleWeights) {
    auto r = validate(candidate(4, {{{1, 2, 3, 4}, 1}, {{1, 2}, 2}, {{3, 4}, 2}, {{1}, 3}, {{2}, 3}, {{3}, 4}, {{4}, 4}}));
    EXPECT_TRUE(r.has(ViolationKind::WeightNotDivisible));
}

TEST(Validate, RejectsChildAsHeavyAsParent) {
    auto r = validate(candidate(2, {{{1, 2}, 1}, {{1}, 1}, {{2}, 1}}));
    EXPECT_TRUE(r.has(ViolationKind::WeightNotDecreasing));
}

TEST(Validate, RejectsMalformedCandidates) {
    EXPECT_TRUE(validate(candidate(0, {})).has(ViolationKind::BadDimension));
    EXPECT_TRUE(validate(candidate(1, {})).has(ViolationKind::NoSets));
    EXPECT_TRUE(validate(candidate(1, {{{2}, 1}})).has(ViolationKind::ElementOutOfRange));
    EXPECT_TRUE(validate(candidate(1, {{{1}, 0}})).has(ViolationKind::NonpositiveWeight));
    EXPECT_TRUE(validate(candidate(1, {{{1}, 1}, {{1}, 1}})).has(ViolationKind::DuplicateSet));
    EXPECT_TRUE(validate(candidate(2, {{{1, 1}, 1}, {{1}, 1}, {{2}, 1}})).has(ViolationKind::RepeatedElement));
}

TEST(Validate, ThrowsWithReportOnConstruction) {
    try {
        datum(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 3}});
        FAIL() << "expected InvalidDatum";
    } catch (const InvalidDatum& e) {
        EXPECT_TRUE(e.report().has(ViolationKind::SiblingWeightsDiffer));
    }
}

TEST(Validate, InputOrderIsIrrelevant) {
    auto a = datum(2, {{{2}, 2}, {{1, 2}, 1}, {{1}, 2}});
    auto b = datum(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}});
    EXPECT_EQ(a, b);
}

// Single-field mutations of valid data either stay valid or are rejected,
// and validate() never throws.
TEST(ValidateProperty, SingleMutationsNeverCrash) {
    std::size_t rejected = 0;
    for (const auto& d : enumerate({3, 3, {}})) {
        auto base = d.candidate();
        std::vector<DatumCandidate> mutants;
        for (std::size_t i = 0; i < base.sets.size(); ++i) {
            for (long delta : {-1L, 1L}) {
                auto m = base;
                m.sets[i].weight += delta;
                mutants.push_back(m);
            }
            auto doubled = base;
            doubled.sets[i].weight *= 2;
            mutants.push_back(doubled);
            auto dropped = base;
            dropped.sets.erase(dropped.sets.begin() + static_cast<long>(i));
            mutants.push_back(dropped);
            for (int x = 1; x <= base.n + 1; ++x) {
                auto grown = base;
                grown.sets[i].elements.push_back(x);
                std::sort(grown.sets[i].elements.begin(), grown.sets[i].elements.end());
                mutants.push_back(grown);
            }
        }
        for (const auto& m : mutants) {
            ValidationReport r;
            ASSERT_NO_THROW(r = validate(m));
            if (r.ok()) {
                EXPECT_NO_THROW(SpecialDatum::from_candidate(m));
            } else {
                ++rejected;
                EXPECT_THROW(SpecialDatum::from_candidate(m), InvalidDatum);
            }
        }
    }
    EXPECT_GT(rejected, 0u);
}

TEST(Structure, ChildrenOfRoot) {
    auto d = fixtures::cyclic(3, 2);
    auto root = *d.find({1, 2, 3});
    EXPECT_EQ(members(d, children(d, root)), (std::vector<std::vector<int>>{{1}, {2}, {3}}));
    EXPECT_TRUE(children(d, d.singleton(1)).empty());
}

TEST(Structure, ChildrenInNestedDatum) {
    auto d = fixtures::nested4();
    auto root = *d.find({1, 2, 3, 4});
    EXPECT_EQ(members(d, children(d, root)), (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
}

TEST(Structure, MaximalElements) {
    auto d = fixtures::two_pairs(2, 2);
    EXPECT_EQ(members(d, maximal_elements(d)), (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
    EXPECT_FALSE(is_connected(d));
    EXPECT_TRUE(is_connected(fixtures::cyclic(3, 2)));
    auto loose = datum(2, {{{1}, 1}, {{2}, 1}});
    EXPECT_EQ(maximal_elements(loose).size(), 2u);
    EXPECT_FALSE(is_connected(loose));
}

TEST(Structure, RestrictToInnerMember) {
    auto d = fixtures::nested4();
    auto r = restrict(d, *d.find({3, 4}));
    EXPECT_EQ(r, datum(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}}));
}

TEST(Structure, RestrictToRootAndSingleton) {
    auto d = fixtures::cyclic(3, 2);
    EXPECT_EQ(restrict(d, *d.find({1, 2, 3})), d);
    EXPECT_EQ(restrict(d, d.singleton(2)), fixtures::point());
}

TEST(Structure, ReduceCyclic) {
    auto d = fixtures::cyclic(3, 2);
    auto r = reduce(d, *d.find({1, 2, 3}));
    EXPECT_EQ(r, datum(3, {{{1}, 1}, {{2}, 1}, {{3}, 1}}));
}

TEST(Structure, ReduceNested) {
    auto d = fixtures::nested4();
    auto r = reduce(d, *d.find({1, 2, 3, 4}));
    EXPECT_EQ(r, datum(4, {{{1, 2}, 1}, {{3, 4}, 1}, {{1}, 2}, {{2}, 2}, {{3}, 2}, {{4}, 2}}));
    EXPECT_EQ(weights(r), (std::vector<long>{2, 1, 2, 2, 1, 2}));
}

TEST(Structure, ReduceRejectsNonMaximal) {
    auto d = fixtures::nested4();
    EXPECT_THROW(reduce(d, *d.find({1, 2})), std::invalid_argument);
    EXPECT_THROW(reduce(fixtures::point(), NodeRef{0}), std::invalid_argument);
}

TEST(Structure, Scale) {
    auto pair = datum(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}});
    EXPECT_EQ(scale(pair, 1), pair);
    EXPECT_EQ(weights(scale(pair, 3)), (std::vector<long>{6, 1, 6}));
    EXPECT_EQ(weights(scale(fixtures::cyclic(3, 2), 2)), (std::vector<long>{4, 1, 4, 4}));
    EXPECT_THROW(scale(fixtures::two_pairs(2, 2), 2), std::invalid_argument);
    EXPECT_THROW(scale(pair, 0), std::invalid_argument);
}

TEST(StructureProperty, OperationsStayValid) {
    for (const auto& d : enumerate({4, 3, {}})) {
        for (NodeRef j : d.nodes()) EXPECT_NO_THROW(restrict(d, j));
        for (NodeRef r : maximal_elements(d)) {
            if (d.elements(r).size() >= 2) {
                auto red = reduce(d, r);
                EXPECT_EQ(red.size(), d.size() - 1);
                EXPECT_EQ(red.dimension(), d.dimension());
            }
        }
        long total = 0;
        for (const auto& c : connected_components(d)) total += c.dimension();
        EXPECT_EQ(total, d.dimension());
    }
}

TEST(MonomialIdeal, FromDatum) {
    auto pair = datum(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}});
    EXPECT_EQ(monomial_ideal(pair).generators(), make_ideal(2, {{1, 1}, {2, 0}, {0, 2}}).generators());
    EXPECT_EQ(monomial_ideal(fixtures::point()).generators(), make_ideal(1, {{1}}).generators());
    EXPECT_EQ(monomial_ideal(fixtures::cyclic(3, 2)).generators(),
              make_ideal(3, {{1, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}).generators());
}

TEST(Canonical, PermutationInvariant) {
    auto d = fixtures::nested4();
    std::vector<int> perm = {1, 2, 3, 4};
    do {
        auto p = relabel(d, perm);
        EXPECT_EQ(canonical_form(p).datum, canonical_form(d).datum);
        EXPECT_TRUE(is_isomorphic(p, d));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Canonical, WeightsDistinguish) {
    auto a = datum(2, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}});
    auto b = datum(2, {{{1, 2}, 1}, {{1}, 3}, {{2}, 3}});
    EXPECT_FALSE(is_isomorphic(a, b));
}

TEST(Canonical, TranspositionIsIsomorphism) {
    auto a = datum(3, {{{1, 2}, 1}, {{1}, 2}, {{2}, 2}, {{3}, 1}});
    auto b = datum(3, {{{1, 3}, 1}, {{1}, 2}, {{3}, 2}, {{2}, 1}});
    EXPECT_TRUE(is_isomorphic(a, b));
}

TEST(Canonical, ReversalMapsOntoCanonical) {
    for (const auto& d : enumerate({4, 3, {}})) {
        std::vector<int> perm;
        for (int i = d.dimension(); i >= 1; --i) perm.push_back(i);
        EXPECT_EQ(canonical_form(relabel(d, perm)).datum, d);
    }
}

TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(enumerate({1, 3, {}}).size(), 1u);
    EXPECT_EQ(enumerate_dimension(2, 3).size(), 3u);
    EXPECT_EQ(enumerate_dimension(3, 2).size(), 4u);
    EXPECT_EQ(labelled_count(3, 2), 8u);
}

// Every labelled datum collapses onto one of the emitted classes, and every
// emitted class is hit.
TEST(Enumerate, LabelledCollapseMatchesClasses) {
    for (int n = 1; n <= 3; ++n) {
        for (long R = 2; R <= 3; ++R) {
            auto classes = enumerate_dimension(n, R);
            std::set<SpecialDatum> hit;
            detail::for_each_labelled(n, R, [&](SpecialDatum d) { hit.insert(canonical_form(d).datum); });
            EXPECT_EQ(std::vector<SpecialDatum>(hit.begin(), hit.end()), classes) << "n=" << n << " R=" << R;
        }
    }
}

TEST(Enumerate, EmittedDataAreCanonicalAndDistinct) {
    auto all = enumerate({4, 3, {}});
    std::set<SpecialDatum> seen;
    for (const auto& d : all) {
        EXPECT_EQ(canonical_form(d).datum, d);
        EXPECT_TRUE(validate(d.candidate()).ok());
        EXPECT_TRUE(seen.insert(d).second);
    }
}

TEST(Enumerate, RejectsBadBudget) {
    EXPECT_THROW(enumerate_dimension(0, 3), std::invalid_argument);
    EXPECT_THROW(enumerate_dimension(2, 1), std::invalid_argument);
}
