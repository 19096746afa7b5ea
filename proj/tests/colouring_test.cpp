#include <chiac/brute_force.hpp>
#include <chiac/canonical.hpp>
#include <chiac/catalogue.hpp>
#include <chiac/colouring.hpp>
#include <chiac/named.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace chiac;
using chiac::testing::random_poset;
using chiac::testing::set_of;

namespace {

auto colouring(std::vector<int> colours) -> Colouring
{
    int k = *std::max_element(colours.begin(), colours.end());
    return {std::move(colours), k};
}

auto registry_patterns() -> std::vector<Poset>
{
    std::vector<Poset> result{chain(2), antichain(2)};
    for (auto & name : three_element_names())
        result.push_back(*named_poset(name));
    for (auto & name : four_element_names())
        result.push_back(registry_poset(name));
    return result;
}

} // namespace

TEST(Colouring, ValidityExamples)
{
    EXPECT_FALSE(is_valid(antichain(2), chain(2), colouring({1, 1})));
    EXPECT_TRUE(is_valid(antichain(2), chain(2), colouring({1, 2})));
    EXPECT_TRUE(is_valid(chain(2), chain(2), colouring({1, 1})));
    EXPECT_TRUE(is_valid(chain(2), chain(2), colouring({2, 1})));
}

TEST(Colouring, ValidityRejectsMalformedColourings)
{
    EXPECT_THROW(is_valid(chain(2), chain(2), colouring({1})), std::invalid_argument);
    EXPECT_THROW(is_valid(chain(2), chain(2), Colouring{{1, 3}, 2}), std::invalid_argument);
    EXPECT_THROW(is_valid(chain(2), chain(2), Colouring{{0, 1}, 2}), std::invalid_argument);
}

TEST(Colouring, MinColoursExamples)
{
    auto a = min_colours(antichain(3), antichain(3));
    EXPECT_EQ(a.min_colours, 3);
    EXPECT_EQ(a.witness.colours, (std::vector<int>{1, 2, 3}));
    EXPECT_FALSE(brute::colourable(3, maximal_free(antichain(3), antichain(3)).sets, 2));

    auto f = min_colours(fence(4), chain(2));
    EXPECT_EQ(f.min_colours, 2);
    EXPECT_EQ(f.family_size, 3U);
    EXPECT_EQ(f.witness.colours, (std::vector<int>{1, 1, 2, 2}));

    auto c = min_colours(chain(3), antichain(2));
    EXPECT_EQ(c.min_colours, 2);
    EXPECT_EQ(c.family_size, 1U);

    auto trivial = min_colours(chain(2), chain(2));
    EXPECT_EQ(trivial.min_colours, 1);
    EXPECT_EQ(trivial.family_size, 0U);
    EXPECT_EQ(min_colours(antichain(1), chain(2)).min_colours, 1);
}

TEST(Colouring, SolverOnExplicitConstraints)
{
    std::vector<Mask> triangle{set_of({0, 1}), set_of({1, 2}), set_of({0, 2})};
    EXPECT_FALSE(colourable(3, triangle, 2));
    EXPECT_TRUE(colourable(3, triangle, 3));
    EXPECT_FALSE(find_colouring(3, triangle, 2).has_value());
    EXPECT_EQ(find_colouring(3, triangle, 3)->colours, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(find_colouring(4, {set_of({2, 3})}, 2)->colours, (std::vector<int>{1, 1, 1, 2}));
}

TEST(Colouring, Theorem3Examples)
{
    auto y = registry_poset("y_up");
    auto c = theorem3_colouring(chain(3), y);
    EXPECT_EQ(c.colours, (std::vector<int>{2, 1, 1}));
    EXPECT_TRUE(is_valid(chain(3), y, c));

    auto self = theorem3_colouring(y, y);
    EXPECT_EQ(self.colours, (std::vector<int>{2, 2, 1, 1}));
    EXPECT_TRUE(is_valid(y, y, self));

    auto flat = theorem3_colouring(antichain(4), y);
    EXPECT_EQ(flat.colours, (std::vector<int>{1, 2, 2, 2}));
    EXPECT_TRUE(is_valid(antichain(4), y, flat));

    EXPECT_TRUE(is_valid(chain(3), registry_poset("chevron_up"), theorem3_colouring(chain(3), registry_poset("chevron_up"))));
}

TEST(Colouring, Theorem3Preconditions)
{
    EXPECT_THROW(theorem3_colouring(chain(3), registry_poset("diamond")), HypothesisError);
    EXPECT_THROW(theorem3_colouring(antichain(1), registry_poset("y_up")), std::invalid_argument);
    EXPECT_THROW(theorem3_dual_colouring(chain(3), registry_poset("y_up")), HypothesisError);
}

TEST(Colouring, Theorem3DualExamples)
{
    auto yd = registry_poset("y_down");
    EXPECT_TRUE(is_valid(chain(3), yd, theorem3_dual_colouring(chain(3), yd)));
    auto self = theorem3_dual_colouring(yd, yd);
    EXPECT_EQ(self.k, 2);
    EXPECT_TRUE(is_valid(yd, yd, self));
}

TEST(Colouring, MinimalsExamples)
{
    EXPECT_EQ(minimals_colouring(chain(3)).colours, (std::vector<int>{1, 2, 2}));
    auto flat = minimals_colouring(antichain(3));
    EXPECT_EQ(flat.colours, (std::vector<int>{1, 1, 1}));
    EXPECT_TRUE(is_valid(antichain(3), antichain(2), flat));
    auto d = registry_poset("diamond");
    EXPECT_EQ(minimals_colouring(d).colours, (std::vector<int>{1, 2, 2, 2}));
    EXPECT_TRUE(is_valid(d, antichain(2), minimals_colouring(d)));
}

TEST(Colouring, HypothesisExamples)
{
    auto y = hypothesis_report(registry_poset("y_up"));
    EXPECT_TRUE(y.two_minimals);
    EXPECT_TRUE(y.maximals_have_nonminimal_cover);
    EXPECT_TRUE(y.thm3_applies);
    EXPECT_FALSE(y.thm3_dual_applies);

    auto t = hypothesis_report(registry_poset("two_plus_two"));
    EXPECT_FALSE(t.thm3_applies);
    EXPECT_TRUE(t.nonbounded);
    EXPECT_TRUE(t.no_isolated);
    EXPECT_TRUE(t.thm2_applies);

    auto d = hypothesis_report(registry_poset("diamond"));
    EXPECT_TRUE(d.bounded);
    EXPECT_TRUE(d.no_interior_splitting);
    EXPECT_TRUE(d.thm1_applies);
    EXPECT_FALSE(d.thm2_applies);
    EXPECT_FALSE(d.thm3_applies);
    EXPECT_FALSE(d.two_minimals);
}

TEST(Colouring, HypothesisConjunctions)
{
    for (auto & f : registry_patterns()) {
        auto r = hypothesis_report(f);
        EXPECT_EQ(r.thm3_applies, r.two_minimals && r.maximals_have_nonminimal_cover);
        EXPECT_EQ(r.thm2_applies, r.nonbounded && r.no_isolated);
        EXPECT_EQ(r.thm1_applies, r.bounded && r.no_interior_splitting);
        EXPECT_EQ(r.bounded, ! r.nonbounded);
        EXPECT_EQ(r.thm3_dual_applies, hypothesis_report(dual(f)).thm3_applies);
    }
}

TEST(Colouring, BoundExamples)
{
    auto y = chi_ac_upper_from_theorems(registry_poset("y_up"));
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(y->bound, 2);
    EXPECT_EQ(y->source, BoundSource::theorem3);

    auto yd = chi_ac_upper_from_theorems(registry_poset("y_down"));
    ASSERT_TRUE(yd.has_value());
    EXPECT_EQ(yd->bound, 2);
    EXPECT_EQ(yd->source, BoundSource::theorem3_dual);

    auto n = chi_ac_upper_from_theorems(registry_poset("n_poset"));
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(n->bound, 3);
    EXPECT_EQ(n->source, BoundSource::theorem2);

    auto d = chi_ac_upper_from_theorems(registry_poset("diamond"));
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->bound, 10);
    EXPECT_EQ(to_string(d->source), "theorem1");

    EXPECT_FALSE(chi_ac_upper_from_theorems(registry_poset("chain2_plus_2points")).has_value());
}

TEST(ColouringProperties, SolverAgreesWithExhaustiveColourings)
{
    std::mt19937 rng(37);
    auto pats = registry_patterns();
    for (int trial = 0; trial < 250; ++trial) {
        int n = 2 + trial % 7;
        auto p = random_poset(rng, n, 0.3);
        auto & f = pats[trial % pats.size()];
        auto family = maximal_free(p, f);
        auto result = min_colours(n, family);
        EXPECT_GE(result.min_colours, 1);
        EXPECT_LE(result.min_colours, n);
        EXPECT_EQ(result.min_colours == 1, family.sets.empty());
        EXPECT_TRUE(is_valid(family, result.witness));
        EXPECT_EQ(result.witness.k, result.min_colours);
        if (result.min_colours > 1)
            EXPECT_FALSE(brute::colourable(n, family.sets, result.min_colours - 1));
        EXPECT_EQ(brute::min_colours_up_to(n, family.sets, result.min_colours), result.min_colours);
        for (int k = 1; k <= std::min(n, 4); ++k)
            EXPECT_EQ(colourable(n, family.sets, k), brute::colourable(n, family.sets, k));
    }
}

TEST(ColouringProperties, WitnessIsLexicographicallySmallest)
{
    std::mt19937 rng(41);
    auto pats = registry_patterns();
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 6;
        auto p = random_poset(rng, n, 0.3);
        auto family = maximal_free(p, pats[trial % pats.size()]);
        auto result = min_colours(n, family);
        int k = result.min_colours;
        std::vector<int> c(n, 1);
        std::optional<std::vector<int>> first;
        while (! first) {
            if (is_valid(family, Colouring{c, k}))
                first = c;
            int i = n - 1;
            while (i >= 0 && c[i] == k)
                c[i--] = 1;
            if (i < 0)
                break;
            ++c[i];
        }
        ASSERT_TRUE(first.has_value());
        EXPECT_EQ(result.witness.colours, *first);
    }
}

TEST(ColouringProperties, DualityPreservesMinColours)
{
    std::mt19937 rng(43);
    auto pats = registry_patterns();
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poset(rng, 2 + trial % 8, 0.3);
        auto & f = pats[trial % pats.size()];
        auto there = min_colours(p, f);
        auto back = min_colours(dual(p), dual(f));
        EXPECT_EQ(there.min_colours, back.min_colours);
        EXPECT_TRUE(is_valid(dual(p), dual(f), there.witness));
    }
}

TEST(ColouringProperties, Theorem3UpToSix)
{
    for (const char * name : {"y_up", "chevron_up"}) {
        auto f = registry_poset(name);
        auto fd = dual(f);
        for (auto * p : catalogue_range(2, 6)) {
            EXPECT_TRUE(is_valid(*p, f, theorem3_colouring(*p, f))) << name << " " << canonical_form(*p).hex();
            EXPECT_TRUE(is_valid(*p, fd, theorem3_dual_colouring(*p, fd))) << name << " " << canonical_form(*p).hex();
        }
    }
}

TEST(ColouringProperties, MinimalsUpToSix)
{
    for (auto * p : catalogue_range(2, 6))
        EXPECT_TRUE(is_valid(*p, antichain(2), minimals_colouring(*p))) << canonical_form(*p).hex();
    EXPECT_EQ(min_colours(chain(2), antichain(2)).min_colours, 2);
}
