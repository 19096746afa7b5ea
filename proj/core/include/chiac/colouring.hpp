#pragma once

#include <chiac/free_family.hpp>
#include <chiac/poset.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace chiac {

class HypothesisError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// colours[x] in 1..k for every element x.
struct Colouring {
    std::vector<int> colours;
    int k = 0;

    auto size() const -> int { return static_cast<int>(colours.size()); }
    friend auto operator==(const Colouring &, const Colouring &) -> bool = default;
};

/// Every member with at least two elements receives two distinct colours.
auto is_valid(const FreeFamily & family, const Colouring & c) -> bool;
auto is_valid(const Poset & p, const Poset & f, const Colouring & c) -> bool;

struct ChromaticResult {
    int min_colours = 1;
    /// Lexicographically smallest valid colouring with min_colours colours.
    Colouring witness;
    std::size_t family_size = 0;
};

/// Lexicographically smallest colouring of 0..n-1 with at most k colours in
/// which no constraint is monochromatic, or nullopt if none exists.
/// Constraints must have at least two elements.
auto find_colouring(int n, const std::vector<Mask> & constraints, int k) -> std::optional<Colouring>;

/// Whether some k-colouring leaves no constraint monochromatic. Searches
/// elements in decreasing constraint-membership order.
auto colourable(int n, const std::vector<Mask> & constraints, int k) -> bool;

auto min_colours(int n, const FreeFamily & family) -> ChromaticResult;
auto min_colours(const Poset & p, const Poset & f) -> ChromaticResult;

/// Requires hypothesis_report(f).thm3_applies and |p| >= 2. For an antichain
/// p, element 0 gets colour 1 and the rest colour 2. Otherwise a is the
/// lowest-index element of height 1; its up-set gets colour 1 and everything
/// else colour 2.
auto theorem3_colouring(const Poset & p, const Poset & f) -> Colouring;

/// theorem3_colouring applied to the duals of p and f.
auto theorem3_dual_colouring(const Poset & p, const Poset & f) -> Colouring;

/// Minimal elements colour 1, the rest colour 2.
auto minimals_colouring(const Poset & p) -> Colouring;

struct HypothesisReport {
    bool two_minimals = false;
    bool maximals_have_nonminimal_cover = false;
    bool thm3_applies = false;
    bool thm3_dual_applies = false;
    bool nonbounded = false;
    bool no_isolated = false;
    bool thm2_applies = false;
    bool bounded = false;
    /// Interior splitting: splitting, and neither the minimum nor the maximum.
    bool no_interior_splitting = false;
    bool thm1_applies = false;

    friend auto operator==(const HypothesisReport &, const HypothesisReport &) -> bool = default;
};

auto hypothesis_report(const Poset & f) -> HypothesisReport;

enum class BoundSource { theorem3, theorem3_dual, theorem2, theorem1 };

auto to_string(BoundSource source) -> std::string_view;

struct TheoremBound {
    int bound;
    BoundSource source;
};

/// Smallest upper bound on the colouring number of f implied by the
/// hypotheses that hold: 2 for theorem3 or its dual, 3 for theorem2, 10 for
/// theorem1.
auto chi_ac_upper_from_theorems(const Poset & f) -> std::optional<TheoremBound>;

} // namespace chiac
