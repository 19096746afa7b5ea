#include <chiac/embedding.hpp>
#include <chiac/free_family.hpp>

#include <algorithm>
#include <stdexcept>

namespace chiac {

auto sort_family(std::vector<Mask> & sets) -> void
{
    std::sort(sets.begin(), sets.end(), lex_less);
}

namespace {
    struct TransversalSearch {
        Mask ground;
        const std::vector<Mask> & edges;
        std::vector<Mask> found;

        auto is_minimal(Mask transversal) const -> bool
        {
            for (int v : elements_of(transversal)) {
                bool has_private_edge = std::any_of(edges.begin(), edges.end(),
                    [&](Mask e) { return (e & transversal) == bit(v); });
                if (! has_private_edge)
                    return false;
            }
            return true;
        }

        // Disjoint branches: taking the i-th available vertex of the chosen
        // edge excludes the earlier ones, so each transversal is reached once.
        auto expand(Mask taken, Mask excluded) -> void
        {
            const Mask * branch_edge = nullptr;
            int fewest = max_elements + 1;
            for (auto & e : edges) {
                if (e & taken)
                    continue;
                int available = popcount(e & ~excluded);
                if (available == 0)
                    return;
                if (available < fewest) {
                    fewest = available;
                    branch_edge = &e;
                }
            }

            if (! branch_edge) {
                if (is_minimal(taken))
                    found.push_back(ground & ~taken);
                return;
            }

            Mask available = *branch_edge & ~excluded;
            Mask passed = 0;
            for (int v : elements_of(available)) {
                expand(taken | bit(v), excluded | passed);
                passed |= bit(v);
            }
        }
    };
}

auto maximal_independent_sets(Mask ground, const std::vector<Mask> & edges) -> std::vector<Mask>
{
    for (auto e : edges)
        if (e == 0 || (e & ~ground))
            throw std::invalid_argument("hypergraph edges must be nonempty subsets of the ground set");

    TransversalSearch search{ground, edges, {}};
    search.expand(0, 0);
    sort_family(search.found);
    return search.found;
}

auto drop_singletons(FreeFamily family) -> FreeFamily
{
    std::erase_if(family.sets, [](Mask s) { return popcount(s) < 2; });
    family.filtered = true;
    return family;
}

auto maximal_free(const Poset & host, const Poset & pattern, bool filter_singletons) -> FreeFamily
{
    if (pattern.size() < 2)
        throw std::invalid_argument("maximal free families need a pattern with at least two elements");

    FreeFamily family{maximal_independent_sets(host.ground(), enumerate_copies(host, pattern)), false};
    return filter_singletons ? drop_singletons(std::move(family)) : family;
}

namespace {
    auto upper_covers(const Poset & p) -> std::vector<Mask>
    {
        std::vector<Mask> result(p.size(), 0);
        for (auto [lower, upper] : covers(p))
            result[lower] |= bit(upper);
        return result;
    }

    auto extend_chain(const std::vector<Mask> & up_covers, int top, Mask chain, std::vector<Mask> & out) -> void
    {
        if (! up_covers[top]) {
            out.push_back(chain);
            return;
        }
        for (int next : elements_of(up_covers[top]))
            extend_chain(up_covers, next, chain | bit(next), out);
    }

    auto bron_kerbosch(const std::vector<Mask> & neighbours, Mask clique, Mask candidates, Mask excluded,
        std::vector<Mask> & out) -> void
    {
        if (! candidates && ! excluded) {
            out.push_back(clique);
            return;
        }
        int pivot = std::countr_zero(candidates | excluded);
        for (int v : elements_of(candidates & ~neighbours[pivot])) {
            bron_kerbosch(neighbours, clique | bit(v), candidates & neighbours[v], excluded & neighbours[v], out);
            candidates &= ~bit(v);
            excluded |= bit(v);
        }
    }
}

auto maximal_chains(const Poset & p) -> FreeFamily
{
    auto up_covers = upper_covers(p);
    FreeFamily family;
    for (int m : elements_of(minimals(p)))
        extend_chain(up_covers, m, bit(m), family.sets);
    sort_family(family.sets);
    return family;
}

auto maximal_antichains(const Poset & p) -> FreeFamily
{
    std::vector<Mask> incomparable(p.size());
    for (int v = 0; v < p.size(); ++v)
        incomparable[v] = p.ground() & ~p.comparable_to(v) & ~bit(v);

    FreeFamily family;
    bron_kerbosch(incomparable, 0, p.ground(), 0, family.sets);
    sort_family(family.sets);
    return family;
}

} // namespace chiac
