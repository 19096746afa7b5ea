#pragma once

#include <chiac/colouring.hpp>
#include <chiac/sweep.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chiac {

/// What is claimed about the colouring number of a small pattern F.
struct ClaimedStatus {
    enum class Kind { exact, at_most, at_least, unknown, infinite };
    enum class Basis { minimals_colouring, unboundedness, theorem3, theorem2, theorem1, external, open };

    Kind kind = Kind::unknown;
    int value = 0;
    Basis basis = Basis::open;
    /// Whether the sweep must reach value. Lower bounds that rest on
    /// unpublished witnesses of unknown size are reported, not gated.
    bool lower_gated = false;

    auto label() const -> std::string;
};

auto to_string(ClaimedStatus::Basis basis) -> std::string;

struct ClaimEntry {
    std::string f_name;
    ClaimedStatus status;
};

/// The 2-, 3- and 4-element status table, in presentation order.
auto claimed_statuses() -> const std::vector<ClaimEntry> &;

struct ClaimRow {
    std::string f_name;
    int f_size = 0;
    ClaimedStatus status;
    HypothesisReport hypotheses;
    std::optional<TheoremBound> theorem_bound;
    SweepReport sweep;
    std::vector<UnboundednessRow> unboundedness;
    /// Set for claims whose lower bound is reported rather than gated.
    std::optional<WitnessSearchResult> witness_search;
    int witness_k = 0;
    bool consistent = false;
    std::vector<std::string> problems;
};

struct PaperTable {
    int n_max = 0;
    std::vector<ClaimRow> rows;
    bool consistent = false;
};

struct PaperTableOptions {
    SweepOptions sweep;
    /// Largest N in the unboundedness grid for the infinite rows.
    int unboundedness_max_n = 9;
    const CheckpointStore * checkpoints = nullptr;
    bool resume = false;
};

/// Evaluates every claim: hypothesis profile, theorem-implied bound, the
/// extremes of min_colours over the catalogue up to n_max, and a verdict.
/// A row is consistent when no swept value exceeds a claimed upper bound,
/// gated exact values are reached, the claimed theorem actually applies,
/// open and infinite rows fire no theorem, and infinite rows satisfy the
/// unboundedness grid.
auto paper_table(int n_max, const PaperTableOptions & options = {}) -> PaperTable;

} // namespace chiac
