#pragma once

#include <chiac/poset.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chiac {

auto chain(int n) -> Poset;
auto antichain(int n) -> Poset;

/// Zigzag 0 < 1 > 2 < 3 > ...: even elements are minimal, odd elements
/// maximal, and each odd element covers its neighbours.
auto fence(int n) -> Poset;

/// Resolves `chain:<n>`, `antichain:<n>`, `fence:<n>` and the fixed registry
/// names. Returns nullopt for unknown names; throws std::invalid_argument for
/// a recognised family with a malformed size.
auto named_poset(std::string_view name) -> std::optional<Poset>;

/// Fixed registry names (no parameterised families), in registry order.
auto registry_names() -> const std::vector<std::string> &;

/// The sixteen 4-element registry entries, one per isomorphism class.
auto four_element_names() -> const std::vector<std::string> &;

/// The five 3-element posets as resolvable names.
auto three_element_names() -> const std::vector<std::string> &;

/// Throws std::invalid_argument for unknown names.
auto registry_poset(std::string_view name) -> Poset;

/// A resolvable name for p's isomorphism class, if it has one: a chain,
/// antichain or fence of p's size, or a registry entry.
auto identify(const Poset & p) -> std::optional<std::string>;

} // namespace chiac
