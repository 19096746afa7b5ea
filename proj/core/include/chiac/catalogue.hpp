#pragma once

#include <chiac/canonical.hpp>
#include <chiac/poset.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chiac {

/// One canonical representative per isomorphism class of n-element posets,
/// ordered by canonical form.
struct PosetCatalogue {
    int size = 0;
    std::vector<Poset> members;
};

/// Extends every (n-1)-element class by a new maximal element over each
/// order ideal (the down-closure of each antichain), then deduplicates by
/// canonical form. Every finite poset arises this way by deleting one of its
/// maximal elements.
auto generate_all(int n, int threads = 0) -> PosetCatalogue;

/// Second, independent strategy: canonical forms of every naturally labelled
/// poset on n elements, built by filtering all subsets of earlier elements
/// for down-closure. Sorted and deduplicated.
auto generate_forms_by_filtering(int n) -> std::vector<CanonicalForm>;

/// Process-wide memoised generate_all. Thread-safe; the reference stays valid
/// for the life of the process.
auto catalogue(int n) -> const PosetCatalogue &;

/// Members of every catalogue with min_size <= n <= max_size, smallest first.
auto catalogue_range(int min_size, int max_size) -> std::vector<const Poset *>;

/// Number of unlabelled posets on n elements for n <= 10 (OEIS A000112).
auto published_poset_count(int n) -> std::optional<std::uint64_t>;

} // namespace chiac
