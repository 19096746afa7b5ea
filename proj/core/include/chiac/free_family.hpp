#pragma once

#include <chiac/poset.hpp>

#include <vector>

namespace chiac {

/// Maximal F-free subsets of a poset, in lexicographic order of their
/// ascending element lists. When filtered, singletons have been dropped.
struct FreeFamily {
    std::vector<Mask> sets;
    bool filtered = false;

    friend auto operator==(const FreeFamily &, const FreeFamily &) -> bool = default;
};

/// Inclusion-maximal subsets of ground containing no edge. Computed as the
/// complements of minimal transversals, branching on an unhit edge.
auto maximal_independent_sets(Mask ground, const std::vector<Mask> & edges) -> std::vector<Mask>;

/// Maximal pattern-free subsets of host: the maximal independent sets of the
/// hypergraph of copies of pattern. The pattern needs at least two elements.
auto maximal_free(const Poset & host, const Poset & pattern, bool filter_singletons = true) -> FreeFamily;

/// Unfiltered; isolated points appear as singleton chains.
auto maximal_chains(const Poset & p) -> FreeFamily;

/// Unfiltered; splitting points appear as singleton antichains.
auto maximal_antichains(const Poset & p) -> FreeFamily;

auto drop_singletons(FreeFamily family) -> FreeFamily;

auto sort_family(std::vector<Mask> & sets) -> void;

} // namespace chiac
