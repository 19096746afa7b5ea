#include <chiac/brute_force.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chiac::brute {

auto induces_copy(const Poset & host, Mask s, const Poset & pattern) -> bool
{
    auto members = elements_of(s);
    int k = pattern.size();
    if (static_cast<int>(members.size()) != k)
        return false;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool matches = true;
        for (int x = 0; x < k && matches; ++x)
            for (int y = 0; y < k && matches; ++y)
                if (pattern.less(x, y) != host.less(members[perm[x]], members[perm[y]]))
                    matches = false;
        if (matches)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

auto copies(const Poset & host, const Poset & pattern) -> std::vector<Mask>
{
    std::vector<Mask> result;
    Mask limit = Mask{1} << host.size();
    for (Mask s = 0; s < limit; ++s)
        if (popcount(s) == pattern.size() && induces_copy(host, s, pattern))
            result.push_back(s);
    sort_family(result);
    return result;
}

auto maximal_free(const Poset & host, const Poset & pattern, bool filter_singletons) -> FreeFamily
{
    if (host.size() > 24)
        throw std::invalid_argument("brute-force families are limited to 24 elements");
    auto all_copies = copies(host, pattern);
    auto free_set = [&](Mask s) {
        return std::none_of(all_copies.begin(), all_copies.end(), [&](Mask c) { return (c & s) == c; });
    };

    FreeFamily family;
    family.filtered = filter_singletons;
    Mask limit = Mask{1} << host.size();
    for (Mask s = 0; s < limit; ++s) {
        if (! free_set(s))
            continue;
        bool maximal = true;
        for (int x = 0; x < host.size() && maximal; ++x)
            if (! contains(s, x) && free_set(s | bit(x)))
                maximal = false;
        if (maximal && (! filter_singletons || popcount(s) >= 2))
            family.sets.push_back(s);
    }
    sort_family(family.sets);
    return family;
}

auto colourable(int n, const std::vector<Mask> & constraints, int k) -> bool
{
    if (k < 1)
        return false;
    std::vector<int> colours(n, 0);
    while (true) {
        bool valid = true;
        for (auto s : constraints) {
            if (popcount(s) < 2)
                continue;
            auto members = elements_of(s);
            bool bicoloured = false;
            for (int x : members)
                if (colours[x] != colours[members.front()])
                    bicoloured = true;
            if (! bicoloured) {
                valid = false;
                break;
            }
        }
        if (valid)
            return true;

        // Next colouring in base-k counting order.
        int i = 0;
        while (i < n && ++colours[i] == k)
            colours[i++] = 0;
        if (i == n)
            return false;
    }
}

auto min_colours_up_to(int n, const std::vector<Mask> & constraints, int k_max) -> std::optional<int>
{
    for (int k = 1; k <= k_max; ++k)
        if (colourable(n, constraints, k))
            return k;
    return std::nullopt;
}

} // namespace chiac::brute
