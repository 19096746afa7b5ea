#include <chiac/poset.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace chiac {

auto elements_of(Mask m) -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(popcount(m));
    for (; m; m &= m - 1)
        result.push_back(std::countr_zero(m));
    return result;
}

auto lex_less(Mask a, Mask b) -> bool
{
    // The lowest differing position decides, unless one list is a prefix of
    // the other.
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y)
            return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

auto Poset::from_relations(int n, const std::vector<Relation> & pairs, std::string name) -> Poset
{
    if (n < 1 || n > max_elements)
        throw std::invalid_argument("element count " + std::to_string(n) + " outside 1.." + std::to_string(max_elements));

    std::vector<Mask> up(n, 0);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw IndexError("relation (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0.." + std::to_string(n - 1));
        if (i == j)
            throw CycleError("relation (" + std::to_string(i) + "," + std::to_string(i) + ") is reflexive");
        up[i] |= bit(j);
    }

    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (contains(up[i], k))
                up[i] |= up[k];

    for (int i = 0; i < n; ++i)
        if (contains(up[i], i))
            throw CycleError("relations force a cycle through element " + std::to_string(i));

    Poset p;
    p.up_ = std::move(up);
    p.name_ = std::move(name);
    p.rebuild_down();
    return p;
}

auto Poset::from_up_sets(std::vector<Mask> up, std::string name) -> Poset
{
    int n = static_cast<int>(up.size());
    if (n < 1 || n > max_elements)
        throw std::invalid_argument("element count " + std::to_string(n) + " outside 1.." + std::to_string(max_elements));
    for (int i = 0; i < n; ++i) {
        if (up[i] & ~full_mask(n))
            throw IndexError("up-set of element " + std::to_string(i) + " mentions elements outside the ground set");
        if (contains(up[i], i))
            throw CycleError("element " + std::to_string(i) + " is below itself");
        for (int j : elements_of(up[i]))
            if ((up[j] & ~up[i]) != 0)
                throw std::invalid_argument("up-sets are not transitively closed at element " + std::to_string(i));
    }

    Poset p;
    p.up_ = std::move(up);
    p.name_ = std::move(name);
    p.rebuild_down();
    return p;
}

auto Poset::rebuild_down() -> void
{
    int n = size();
    down_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : elements_of(up_[i]))
            down_[j] |= bit(i);
}

auto Poset::relation_count() const -> int
{
    int count = 0;
    for (auto m : up_)
        count += popcount(m);
    return count;
}

auto covers(const Poset & p) -> CoverList
{
    CoverList result;
    for (int i = 0; i < p.size(); ++i) {
        Mask above = p.above(i);
        Mask implied = 0;
        for (int k : elements_of(above))
            implied |= p.above(k);
        for (int j : elements_of(above & ~implied))
            result.emplace_back(i, j);
    }
    return result;
}

auto dual(const Poset & p) -> Poset
{
    std::vector<Mask> up(p.size());
    for (int i = 0; i < p.size(); ++i)
        up[i] = p.below(i);
    return Poset::from_up_sets(std::move(up), p.name().empty() ? std::string{} : "dual(" + p.name() + ")");
}

auto minimals(const Poset & p) -> Mask
{
    Mask result = 0;
    for (int i = 0; i < p.size(); ++i)
        if (! p.below(i))
            result |= bit(i);
    return result;
}

auto maximals(const Poset & p) -> Mask
{
    Mask result = 0;
    for (int i = 0; i < p.size(); ++i)
        if (! p.above(i))
            result |= bit(i);
    return result;
}

auto up_set(const Poset & p, int a) -> Mask
{
    if (a < 0 || a >= p.size())
        throw IndexError("element " + std::to_string(a) + " out of range");
    return p.above(a) | bit(a);
}

auto down_set(const Poset & p, int a) -> Mask
{
    if (a < 0 || a >= p.size())
        throw IndexError("element " + std::to_string(a) + " out of range");
    return p.below(a) | bit(a);
}

namespace {
    // Elements sorted so that everything below x precedes x.
    auto linear_extension(const Poset & p) -> std::vector<int>
    {
        std::vector<int> order(p.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(p.below(a)) < popcount(p.below(b)); });
        return order;
    }
}

auto heights(const Poset & p) -> std::vector<int>
{
    std::vector<int> h(p.size(), 0);
    for (int x : linear_extension(p))
        for (int y : elements_of(p.below(x)))
            h[x] = std::max(h[x], h[y] + 1);
    return h;
}

auto depths(const Poset & p) -> std::vector<int>
{
    auto order = linear_extension(p);
    std::vector<int> d(p.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int y : elements_of(p.above(*it)))
            d[*it] = std::max(d[*it], d[y] + 1);
    return d;
}

auto height(const Poset & p, int x) -> int
{
    if (x < 0 || x >= p.size())
        throw IndexError("element " + std::to_string(x) + " out of range");
    return heights(p)[x];
}

auto is_antichain(const Poset & p) -> bool
{
    return p.relation_count() == 0;
}

auto is_bounded(const Poset & p) -> bool
{
    // In a finite poset a unique minimal element is the minimum.
    return popcount(minimals(p)) == 1 && popcount(maximals(p)) == 1;
}

auto isolated_elements(const Poset & p) -> Mask
{
    Mask result = 0;
    for (int i = 0; i < p.size(); ++i)
        if (! p.comparable_to(i))
            result |= bit(i);
    return result;
}

auto splitting_elements(const Poset & p) -> Mask
{
    Mask result = 0;
    for (int i = 0; i < p.size(); ++i)
        if ((p.comparable_to(i) | bit(i)) == p.ground())
            result |= bit(i);
    return result;
}

auto interior_splitting_elements(const Poset & p) -> Mask
{
    Mask extremes = 0;
    Mask mins = minimals(p), maxs = maximals(p);
    if (popcount(mins) == 1)
        extremes |= mins;
    if (popcount(maxs) == 1)
        extremes |= maxs;
    return splitting_elements(p) & ~extremes;
}

auto disjoint_union(const Poset & p, const Poset & q) -> Poset
{
    int n = p.size() + q.size();
    if (n > max_elements)
        throw std::invalid_argument("disjoint union exceeds " + std::to_string(max_elements) + " elements");
    std::vector<Mask> up(n);
    for (int i = 0; i < p.size(); ++i)
        up[i] = p.above(i);
    for (int i = 0; i < q.size(); ++i)
        up[p.size() + i] = q.above(i) << p.size();
    return Poset::from_up_sets(std::move(up));
}

auto induced(const Poset & p, Mask s) -> Poset
{
    auto old_of_new = elements_of(s & p.ground());
    return relabel(p, old_of_new);
}

auto relabel(const Poset & p, const std::vector<int> & old_of_new) -> Poset
{
    int m = static_cast<int>(old_of_new.size());
    std::vector<int> new_of_old(p.size(), -1);
    for (int i = 0; i < m; ++i)
        new_of_old[old_of_new[i]] = i;

    std::vector<Mask> up(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j : elements_of(p.above(old_of_new[i])))
            if (new_of_old[j] >= 0)
                up[i] |= bit(new_of_old[j]);
    return Poset::from_up_sets(std::move(up), p.name());
}

} // namespace chiac
