#include <chiac/canonical.hpp>
#include <chiac/named.hpp>

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace chiac;
using chiac::testing::random_permutation;
using chiac::testing::random_poset;

TEST(Canonical, RelabelledChain)
{
    EXPECT_TRUE(is_isomorphic(chain(3), relabel(chain(3), {1, 2, 0})));
    EXPECT_EQ(canonical_form(chain(3)), canonical_form(relabel(chain(3), {2, 0, 1})));
}

TEST(Canonical, V3AndLambda3Differ)
{
    EXPECT_FALSE(is_isomorphic(registry_poset("v3"), registry_poset("lambda3")));
}

TEST(Canonical, SixteenFourElementPosetsAreDistinct)
{
    std::set<CanonicalForm> forms;
    for (auto & name : four_element_names())
        forms.insert(canonical_form(registry_poset(name)));
    EXPECT_EQ(forms.size(), 16U);
}

TEST(Canonical, FiveThreeElementPosetsAreDistinct)
{
    std::set<CanonicalForm> forms;
    for (auto & name : three_element_names())
        forms.insert(canonical_form(*named_poset(name)));
    EXPECT_EQ(forms.size(), 5U);
}

TEST(Canonical, HexRoundTrip)
{
    auto form = canonical_form(registry_poset("diamond"));
    EXPECT_EQ(CanonicalForm::from_hex(form.hex()), form);
    EXPECT_EQ(form.bytes.front(), 4);
    EXPECT_EQ(form.bytes.size(), 3U);
    EXPECT_THROW(CanonicalForm::from_hex("0"), std::invalid_argument);
    EXPECT_THROW(CanonicalForm::from_hex("zz"), std::invalid_argument);
}

TEST(Canonical, RepresentativeDecodes)
{
    for (auto & name : registry_names()) {
        auto p = registry_poset(name);
        auto rep = canonical_poset(p);
        EXPECT_EQ(poset_from_form(canonical_form(p)), rep) << name;
        EXPECT_EQ(relabel(p, canonical_labelling(p)), rep) << name;
        EXPECT_EQ(canonical_form(rep), canonical_form(p)) << name;
    }
}

TEST(Canonical, IdentifyNames)
{
    EXPECT_EQ(identify(relabel(registry_poset("y_up"), {3, 1, 0, 2})), "y_up");
    EXPECT_EQ(identify(chain(5)), "chain:5");
    EXPECT_EQ(identify(antichain(2)), "antichain:2");
}

TEST(CanonicalProperties, InvariantUnderRelabelling)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + trial % 11;
        double density = 0.1 + 0.1 * (trial % 6);
        auto p = random_poset(rng, n, density);
        auto q = relabel(p, random_permutation(rng, n));
        EXPECT_EQ(canonical_form(p), canonical_form(q));
        EXPECT_EQ(canonical_form(dual(p)), canonical_form(dual(q)));
    }
}

TEST(CanonicalProperties, DistinguishesNonIsomorphic)
{
    // Independent check: brute-force isomorphism on small random pairs.
    std::mt19937 rng(5);
    int differing = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 5;
        auto p = random_poset(rng, n, 0.4);
        auto q = random_poset(rng, n, 0.4);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool iso = false;
        do
            iso = relabel(q, perm) == p;
        while (! iso && std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(is_isomorphic(p, q), iso);
        differing += ! iso;
    }
    EXPECT_GT(differing, 0);
}
