#pragma once

#include <chiac/colouring.hpp>
#include <chiac/free_family.hpp>
#include <chiac/paper_table.hpp>
#include <chiac/sweep.hpp>

#include <json.hpp>

namespace chiac::cli {

inline constexpr const char * interior_splitting_definition =
    "splitting element that is neither the minimum nor the maximum";

auto elements_json(Mask m) -> nlohmann::json;
auto family_json(const FreeFamily & family) -> nlohmann::json;
auto poset_json(const Poset & p) -> nlohmann::json;
auto hypotheses_json(const HypothesisReport & r) -> nlohmann::json;
auto theorem_bound_json(const std::optional<TheoremBound> & bound) -> nlohmann::json;
auto sweep_json(const SweepReport & report) -> nlohmann::json;
auto witness_search_json(const WitnessSearchResult & result, int k) -> nlohmann::json;
auto claim_row_json(const ClaimRow & row) -> nlohmann::json;
auto theorem3_json(const Theorem3Sweep & sweep) -> nlohmann::json;
auto minimals_json(const MinimalsSweep & sweep) -> nlohmann::json;
auto unboundedness_json(const UnboundednessRow & row) -> nlohmann::json;

} // namespace chiac::cli
