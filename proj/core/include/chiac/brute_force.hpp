#pragma once

// Exhaustive reference computations. Nothing here shares code with the
// backtracking embedder, the transversal enumerator or the colouring solver;
// these exist to certify their outputs at small sizes.

#include <chiac/free_family.hpp>
#include <chiac/poset.hpp>

#include <optional>
#include <vector>

namespace chiac::brute {

/// Tries every bijection between s and the pattern.
auto induces_copy(const Poset & host, Mask s, const Poset & pattern) -> bool;

/// Every |pattern|-subset inducing a copy, lexicographic.
auto copies(const Poset & host, const Poset & pattern) -> std::vector<Mask>;

/// Checks all 2^n subsets for freeness and one-step maximality.
auto maximal_free(const Poset & host, const Poset & pattern, bool filter_singletons = true) -> FreeFamily;

/// Whether any of the k^n colourings leaves every constraint (of two or more
/// elements) bicoloured.
auto colourable(int n, const std::vector<Mask> & constraints, int k) -> bool;

/// Least k <= k_max admitting a valid colouring, found by trying every
/// colouring; nullopt when k_max colours do not suffice.
auto min_colours_up_to(int n, const std::vector<Mask> & constraints, int k_max) -> std::optional<int>;

} // namespace chiac::brute
