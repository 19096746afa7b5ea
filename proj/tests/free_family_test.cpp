#include <chiac/brute_force.hpp>
#include <chiac/canonical.hpp>
#include <chiac/catalogue.hpp>
#include <chiac/embedding.hpp>
#include <chiac/free_family.hpp>
#include <chiac/named.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace chiac;
using chiac::testing::random_poset;
using chiac::testing::set_of;

namespace {

auto registry_patterns() -> std::vector<Poset>
{
    std::vector<Poset> result;
    for (auto & name : three_element_names())
        result.push_back(*named_poset(name));
    for (auto & name : four_element_names())
        result.push_back(registry_poset(name));
    return result;
}

auto subsets_of_size(int n, int k) -> std::vector<Mask>
{
    std::vector<Mask> result;
    for (Mask s = 0; s <= full_mask(n); ++s)
        if (popcount(s) == k)
            result.push_back(s);
    sort_family(result);
    return result;
}

} // namespace

TEST(FreeFamily, AntichainInAntichain)
{
    for (int big = 3; big <= 7; ++big)
        for (int n = 3; n <= big; ++n)
            EXPECT_EQ(maximal_free(antichain(big), antichain(n)).sets, subsets_of_size(big, n - 1));
}

TEST(FreeFamily, NoCopiesGivesWholeSet)
{
    auto family = maximal_free(chain(3), registry_poset("y_up"));
    EXPECT_EQ(family.sets, (std::vector<Mask>{set_of({0, 1, 2})}));
    EXPECT_TRUE(family.filtered);
}

TEST(FreeFamily, SelfInY)
{
    auto y = registry_poset("y_up");
    EXPECT_EQ(maximal_free(y, y).sets, subsets_of_size(4, 3));
}

TEST(FreeFamily, Chains)
{
    EXPECT_EQ(maximal_chains(chain(3)).sets, (std::vector<Mask>{set_of({0, 1, 2})}));
    EXPECT_EQ(maximal_chains(registry_poset("diamond")).sets, (std::vector<Mask>{set_of({0, 1, 3}), set_of({0, 2, 3})}));
    EXPECT_EQ(maximal_chains(fence(4)).sets, (std::vector<Mask>{set_of({0, 1}), set_of({1, 2}), set_of({2, 3})}));
    EXPECT_EQ(maximal_chains(registry_poset("chain2_plus_point")).sets,
        (std::vector<Mask>{set_of({0, 1}), set_of({2})}));
}

TEST(FreeFamily, Antichains)
{
    EXPECT_EQ(maximal_antichains(antichain(3)).sets, (std::vector<Mask>{set_of({0, 1, 2})}));
    EXPECT_EQ(maximal_antichains(chain(3)).sets, (std::vector<Mask>{set_of({0}), set_of({1}), set_of({2})}));
    EXPECT_EQ(maximal_antichains(fence(4)).sets, (std::vector<Mask>{set_of({0, 2}), set_of({0, 3}), set_of({1, 3})}));
}

TEST(FreeFamily, SingletonFilter)
{
    auto unfiltered = maximal_free(chain(3), chain(2), false);
    EXPECT_EQ(unfiltered.sets.size(), 3U);
    EXPECT_FALSE(unfiltered.filtered);
    auto filtered = maximal_free(chain(3), chain(2));
    EXPECT_TRUE(filtered.sets.empty());
    EXPECT_EQ(drop_singletons(unfiltered), filtered);
    EXPECT_THROW(maximal_free(chain(3), antichain(1)), std::invalid_argument);
}

TEST(FreeFamily, IndependentSetsOfHypergraph)
{
    EXPECT_EQ(maximal_independent_sets(full_mask(3), {}), (std::vector<Mask>{full_mask(3)}));
    EXPECT_EQ(maximal_independent_sets(full_mask(3), {set_of({0, 1}), set_of({1, 2})}),
        (std::vector<Mask>{set_of({0, 2}), set_of({1})}));
}

TEST(FreeFamilyProperties, OracleUpToFive)
{
    auto pats = registry_patterns();
    pats.push_back(chain(2));
    pats.push_back(antichain(2));
    for (auto * p : catalogue_range(1, 5))
        for (auto & f : pats)
            for (bool filter : {false, true})
                ASSERT_EQ(maximal_free(*p, f, filter), brute::maximal_free(*p, f, filter))
                    << canonical_form(*p).hex() << " / " << canonical_form(f).hex();
}

TEST(FreeFamilyProperties, ChainAndAntichainSpecialisation)
{
    for (auto * p : catalogue_range(1, 6)) {
        EXPECT_EQ(maximal_free(*p, antichain(2), false), maximal_chains(*p));
        EXPECT_EQ(maximal_free(*p, chain(2), false), maximal_antichains(*p));
    }
}

TEST(FreeFamilyProperties, MembersAreMaximalFreeAndIncomparable)
{
    std::mt19937 rng(23);
    auto pats = registry_patterns();
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poset(rng, 3 + trial % 7, 0.3);
        auto & f = pats[trial % pats.size()];
        auto family = maximal_free(p, f, false);
        ASSERT_FALSE(family.sets.empty());
        for (auto s : family.sets) {
            EXPECT_TRUE(is_free(p, s, f));
            for (int x : elements_of(p.ground() & ~s))
                EXPECT_FALSE(is_free(p, s | bit(x), f));
            for (auto t : family.sets)
                if (s != t)
                    EXPECT_NE(s & t, s);
        }
        auto sorted = family.sets;
        sort_family(sorted);
        EXPECT_EQ(sorted, family.sets);
    }
}

TEST(FreeFamilyProperties, FreeSetsExtendToMembers)
{
    std::mt19937 rng(29);
    auto pats = registry_patterns();
    for (int trial = 0; trial < 300; ++trial) {
        auto p = random_poset(rng, 3 + trial % 8, 0.3);
        auto & f = pats[trial % pats.size()];
        Mask s = std::uniform_int_distribution<Mask>(0, p.ground())(rng);
        if (! is_free(p, s, f))
            continue;
        auto family = maximal_free(p, f, false);
        EXPECT_TRUE(std::any_of(family.sets.begin(), family.sets.end(), [&](Mask m) { return (m & s) == s; }));
    }
}

TEST(FreeFamilyProperties, Duality)
{
    std::mt19937 rng(31);
    auto pats = registry_patterns();
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poset(rng, 3 + trial % 7, 0.3);
        auto & f = pats[trial % pats.size()];
        EXPECT_EQ(maximal_free(dual(p), dual(f)), maximal_free(p, f));
    }
}
