#include <chiac/canonical.hpp>
#include <chiac/named.hpp>
#include <chiac/poset.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace chiac;
using chiac::testing::random_poset;
using chiac::testing::set_of;

TEST(Poset, SingleRelation)
{
    auto p = Poset::from_relations(2, {{0, 1}});
    EXPECT_TRUE(p.less(0, 1));
    EXPECT_FALSE(p.less(1, 0));
    EXPECT_EQ(p.relation_count(), 1);
}

TEST(Poset, TransitivityIsClosed)
{
    auto p = Poset::from_relations(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(p.less(0, 2));
}

TEST(Poset, RedundantPairsAccepted)
{
    auto p = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
    EXPECT_EQ(p, chain(3));
}

TEST(Poset, CycleRejected)
{
    EXPECT_THROW(Poset::from_relations(2, {{0, 1}, {1, 0}}), CycleError);
    EXPECT_THROW(Poset::from_relations(1, {{0, 0}}), CycleError);
    EXPECT_THROW(Poset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
}

TEST(Poset, OutOfRangeRejected)
{
    EXPECT_THROW(Poset::from_relations(2, {{0, 2}}), IndexError);
    EXPECT_THROW(Poset::from_relations(2, {{-1, 0}}), IndexError);
}

TEST(Poset, UpSetsMustBeAnOrder)
{
    EXPECT_THROW(Poset::from_up_sets({set_of({1}), set_of({2}), 0}), std::invalid_argument);
    EXPECT_THROW(Poset::from_up_sets({set_of({1}), set_of({0})}), std::invalid_argument);
    auto p = Poset::from_up_sets({set_of({1, 2}), set_of({2}), 0});
    EXPECT_EQ(p, chain(3));
}

TEST(Poset, Covers)
{
    EXPECT_EQ(covers(chain(3)), (CoverList{{0, 1}, {1, 2}}));
    EXPECT_EQ(covers(registry_poset("diamond")), (CoverList{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    EXPECT_TRUE(covers(antichain(4)).empty());
}

TEST(Poset, Dual)
{
    EXPECT_EQ(dual(chain(3)), relabel(chain(3), {2, 1, 0}));
    EXPECT_TRUE(is_isomorphic(dual(registry_poset("v3")), registry_poset("lambda3")));
    EXPECT_EQ(dual(antichain(5)), antichain(5));
}

TEST(Poset, MinimalsAndMaximals)
{
    EXPECT_EQ(minimals(chain(3)), set_of({0}));
    EXPECT_EQ(maximals(chain(3)), set_of({2}));
    EXPECT_EQ(minimals(antichain(3)), set_of({0, 1, 2}));
    EXPECT_EQ(maximals(antichain(3)), set_of({0, 1, 2}));
    auto y = registry_poset("y_up");
    EXPECT_EQ(minimals(y), set_of({0, 1}));
    EXPECT_EQ(maximals(y), set_of({3}));
}

TEST(Poset, UpSet)
{
    EXPECT_EQ(up_set(chain(3), 1), set_of({1, 2}));
    EXPECT_EQ(up_set(antichain(3), 0), set_of({0}));
    EXPECT_EQ(up_set(registry_poset("diamond"), 0), set_of({0, 1, 2, 3}));
    EXPECT_EQ(down_set(registry_poset("diamond"), 1), set_of({0, 1}));
}

TEST(Poset, Heights)
{
    EXPECT_EQ(heights(chain(3)), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(heights(registry_poset("y_up")), (std::vector<int>{0, 0, 1, 2}));
    EXPECT_EQ(heights(antichain(4)), (std::vector<int>(4, 0)));
    EXPECT_EQ(depths(registry_poset("y_up")), (std::vector<int>{2, 2, 1, 0}));
    EXPECT_EQ(height(registry_poset("chevron_up"), 2), 2);
}

TEST(Poset, BoundedIsolatedSplitting)
{
    auto d = registry_poset("diamond");
    EXPECT_TRUE(is_bounded(d));
    EXPECT_EQ(isolated_elements(d), 0U);
    EXPECT_EQ(splitting_elements(d), set_of({0, 3}));
    EXPECT_EQ(interior_splitting_elements(d), 0U);

    auto cp = registry_poset("chain2_plus_point");
    EXPECT_FALSE(is_bounded(cp));
    EXPECT_EQ(isolated_elements(cp), set_of({2}));

    EXPECT_EQ(splitting_elements(chain(3)), set_of({0, 1, 2}));
    EXPECT_EQ(interior_splitting_elements(chain(3)), set_of({1}));
}

TEST(Poset, SplittingBetweenBounds)
{
    auto p = Poset::from_relations(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
    EXPECT_EQ(splitting_elements(p), set_of({0, 3, 4}));
    EXPECT_EQ(interior_splitting_elements(p), set_of({3}));
}

TEST(Poset, DisjointUnion)
{
    auto p = disjoint_union(chain(2), antichain(1));
    EXPECT_EQ(p.size(), 3);
    EXPECT_EQ(p.relation_count(), 1);
    EXPECT_EQ(disjoint_union(antichain(2), antichain(2)), antichain(4));
    EXPECT_EQ(disjoint_union(chain(2), chain(2)), registry_poset("two_plus_two"));
}

TEST(Poset, InducedAndRelabel)
{
    auto y = registry_poset("y_up");
    EXPECT_EQ(induced(y, set_of({0, 2, 3})), chain(3));
    EXPECT_EQ(induced(y, set_of({0, 1})), antichain(2));
    auto r = relabel(chain(3), {2, 0, 1});
    EXPECT_TRUE(r.less(1, 2));
    EXPECT_TRUE(r.less(2, 0));
}

TEST(Poset, NamedFamilies)
{
    EXPECT_EQ(covers(fence(4)), (CoverList{{0, 1}, {2, 1}, {2, 3}}));
    EXPECT_EQ(*named_poset("chain:4"), chain(4));
    EXPECT_EQ(*named_poset("2plus2"), registry_poset("two_plus_two"));
    EXPECT_FALSE(named_poset("nonsense").has_value());
    EXPECT_THROW(named_poset("chain:x"), std::invalid_argument);
    EXPECT_THROW(registry_poset("nonsense"), std::invalid_argument);
    EXPECT_EQ(four_element_names().size(), 16U);
    EXPECT_EQ(three_element_names().size(), 5U);
}

TEST(PosetProperties, RandomInvariants)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 12;
        auto p = random_poset(rng, n, 0.3);
        auto q = Poset::from_relations(n, covers(p));
        EXPECT_EQ(q, p);
        EXPECT_EQ(dual(dual(p)), p);
        auto h = heights(p);
        for (int x = 0; x < n; ++x) {
            EXPECT_FALSE(p.less(x, x));
            EXPECT_EQ(h[x] == 0, contains(minimals(p), x));
            EXPECT_EQ(p.below(x), dual(p).above(x));
            for (int y = 0; y < n; ++y) {
                EXPECT_FALSE(p.less(x, y) && p.less(y, x));
                if (p.less(x, y))
                    EXPECT_LT(h[x], h[y]);
                for (int z = 0; z < n; ++z)
                    if (p.less(x, y) && p.less(y, z))
                        EXPECT_TRUE(p.less(x, z));
            }
        }
        for (auto [i, j] : covers(p))
            for (int k = 0; k < n; ++k)
                EXPECT_FALSE(p.less(i, k) && p.less(k, j));
    }
}

TEST(PosetProperties, HeightsMatchLongestChainsBySubsets)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 8;
        auto p = random_poset(rng, n, 0.4);
        std::vector<int> longest(n, 0);
        for (Mask s = 1; s <= full_mask(n); ++s) {
            auto xs = elements_of(s);
            bool is_chain = true;
            for (std::size_t a = 0; a < xs.size(); ++a)
                for (std::size_t b = a + 1; b < xs.size(); ++b)
                    is_chain = is_chain && p.comparable(xs[a], xs[b]);
            if (! is_chain)
                continue;
            for (int top : xs)
                if ((p.below(top) & s) == (s & ~bit(top)))
                    longest[top] = std::max(longest[top], popcount(s) - 1);
        }
        EXPECT_EQ(heights(p), longest);
    }
}
