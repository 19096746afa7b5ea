#pragma once

#include <chiac/poset.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chiac {

/// Isomorphism-class fingerprint. Byte 0 is the element count, followed by
/// the row-major strict-order matrix of the canonical labelling, packed
/// least-significant bit first.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm &) const = default;
    auto operator==(const CanonicalForm &) const -> bool = default;

    auto hex() const -> std::string;
    static auto from_hex(const std::string & text) -> CanonicalForm;
};

/// Canonical labelling: element old_of_new[i] of p is element i of the
/// canonical representative.
auto canonical_labelling(const Poset & p) -> std::vector<int>;

auto canonical_form(const Poset & p) -> CanonicalForm;

/// The canonical representative of p's isomorphism class.
auto canonical_poset(const Poset & p) -> Poset;

/// Decodes a fingerprint back to its canonical representative.
auto poset_from_form(const CanonicalForm & form) -> Poset;

auto is_isomorphic(const Poset & p, const Poset & q) -> bool;

} // namespace chiac
