#pragma once

#include <chiac/poset.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace chiac {

/// Injective, order-preserving and order-reflecting map: element x of the
/// pattern goes to element embedding[x] of the host.
using Embedding = std::vector<int>;

/// Vertex set of the host that induces a copy of the pattern.
using CopySet = Mask;

/// Calls visit for every induced embedding of pattern into host whose image
/// lies inside within. Stops early when visit returns false.
auto for_each_embedding(const Poset & host, const Poset & pattern, Mask within,
    const std::function<bool(const Embedding &)> & visit) -> void;

auto find_embedding(const Poset & host, const Poset & pattern) -> std::optional<Embedding>;
auto find_embedding(const Poset & host, const Poset & pattern, Mask within) -> std::optional<Embedding>;

/// Every vertex set of host inducing a copy of pattern, once each, in
/// lexicographic order. The pattern needs at least two elements.
auto enumerate_copies(const Poset & host, const Poset & pattern) -> std::vector<CopySet>;
auto enumerate_copies(const Poset & host, const Poset & pattern, Mask within) -> std::vector<CopySet>;

/// True iff the subposet of host induced on s contains no copy of pattern.
auto is_free(const Poset & host, Mask s, const Poset & pattern) -> bool;

} // namespace chiac
