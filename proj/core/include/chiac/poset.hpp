#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chiac {

/// Subsets of a poset's ground set, one bit per element.
using Mask = std::uint64_t;

inline constexpr int max_elements = 64;

using Relation = std::pair<int, int>;
using CoverList = std::vector<Relation>;

class CycleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline auto popcount(Mask m) -> int { return std::popcount(m); }
inline auto contains(Mask m, int i) -> bool { return (m >> i) & 1U; }
inline auto bit(int i) -> Mask { return Mask{1} << i; }
inline auto full_mask(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Ascending element list of a mask.
auto elements_of(Mask m) -> std::vector<int>;

/// Orders masks lexicographically by their ascending element lists.
auto lex_less(Mask a, Mask b) -> bool;

/// A finite strict partial order on the dense ground set 0..n-1.
///
/// Stored as strict up-sets and down-sets, one mask per element. Every
/// constructor either produces a closed, irreflexive, antisymmetric relation
/// or throws.
class Poset {
public:
    Poset() = default;

    /// Transitive closure of an arbitrary acyclic relation. Pairs need not be
    /// covers; implied or repeated pairs are accepted.
    static auto from_relations(int n, const std::vector<Relation> & pairs, std::string name = {}) -> Poset;

    /// From strict up-set masks that already describe a partial order.
    /// Throws std::invalid_argument if they do not.
    static auto from_up_sets(std::vector<Mask> up, std::string name = {}) -> Poset;

    auto size() const -> int { return static_cast<int>(up_.size()); }
    auto ground() const -> Mask { return full_mask(size()); }

    auto less(int i, int j) const -> bool { return contains(up_[i], j); }
    auto comparable(int i, int j) const -> bool { return contains(up_[i] | down_[i], j); }

    /// Strict up-set / down-set of i: the elements strictly above / below it.
    auto above(int i) const -> Mask { return up_[i]; }
    auto below(int i) const -> Mask { return down_[i]; }
    auto comparable_to(int i) const -> Mask { return up_[i] | down_[i]; }

    auto name() const -> const std::string & { return name_; }
    auto set_name(std::string name) -> void { name_ = std::move(name); }

    auto relation_count() const -> int;

    /// Structural equality; names are ignored.
    friend auto operator==(const Poset & a, const Poset & b) -> bool { return a.up_ == b.up_; }

private:
    std::vector<Mask> up_, down_;
    std::string name_;

    auto rebuild_down() -> void;
};

auto covers(const Poset & p) -> CoverList;
auto dual(const Poset & p) -> Poset;

auto minimals(const Poset & p) -> Mask;
auto maximals(const Poset & p) -> Mask;

/// a together with every element above it.
auto up_set(const Poset & p, int a) -> Mask;
auto down_set(const Poset & p, int a) -> Mask;

/// Edge length of the longest chain from a minimal element up to x.
auto height(const Poset & p, int x) -> int;
auto heights(const Poset & p) -> std::vector<int>;
/// Edge length of the longest chain from x up to a maximal element.
auto depths(const Poset & p) -> std::vector<int>;

auto is_antichain(const Poset & p) -> bool;
auto is_bounded(const Poset & p) -> bool;
auto isolated_elements(const Poset & p) -> Mask;
auto splitting_elements(const Poset & p) -> Mask;

/// Splitting elements that are neither the minimum nor the maximum of p.
auto interior_splitting_elements(const Poset & p) -> Mask;

/// Elements of q are shifted up by p.size(); there are no cross relations.
auto disjoint_union(const Poset & p, const Poset & q) -> Poset;

/// The subposet induced on s, relabelled 0..|s|-1 in ascending order.
auto induced(const Poset & p, Mask s) -> Poset;

/// Element old_of_new[i] of p becomes element i of the result.
auto relabel(const Poset & p, const std::vector<int> & old_of_new) -> Poset;

} // namespace chiac
