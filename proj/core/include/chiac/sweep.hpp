#pragma once

#include <chiac/canonical.hpp>
#include <chiac/colouring.hpp>
#include <chiac/poset.hpp>
#include <chiac/store.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chiac {

struct SweepOptions {
    /// 0 means one worker per hardware thread.
    int threads = 0;
    /// Consulted and filled only for posets in canonical labelling.
    const ResultCache * cache = nullptr;
};

/// min_colours backed by the cache when one is configured. Cached entries
/// are revalidated against the recomputed constraint family.
auto min_colours_cached(const Poset & p, const Poset & f, const SweepOptions & options) -> ChromaticResult;

struct SizeTiming {
    int size = 0;
    std::size_t posets = 0;
    double seconds = 0;
};

struct SweepReport {
    std::string f_name;
    std::optional<int> bound_claimed;
    int n_max = 0;
    int max_observed = 0;
    /// Canonical forms attaining max_observed, first few in catalogue order.
    std::vector<CanonicalForm> argmax;
    std::size_t argmax_count = 0;
    std::vector<SizeTiming> timing;
    std::size_t posets_checked = 0;
    bool passed = true;
};

inline constexpr std::size_t max_reported_argmax = 10;

/// min_colours(P, f) over every catalogue member with 2 <= |P| <= n_max.
auto sweep_min_colours(const Poset & f, int n_max, const SweepOptions & options = {}) -> SweepReport;

/// As sweep_min_colours; passes iff the observed maximum is at most bound.
auto verify_upper_bound(const Poset & f, int bound, int n_max, const SweepOptions & options = {}) -> SweepReport;

struct WitnessSearchOptions {
    SweepOptions sweep;
    const CheckpointStore * checkpoints = nullptr;
    bool resume = false;
    /// Members processed between checkpoint writes.
    std::size_t chunk = 512;
};

struct WitnessSearchResult {
    std::string job_id;
    std::optional<Poset> witness;
    int n_max = 0;
    bool resumed = false;
    std::size_t posets_checked = 0;
};

auto witness_job_id(const Poset & f, int k) -> std::string;

/// Smallest catalogue member (by size, then canonical order) needing at
/// least k colours against f, or nullopt within n_max.
auto search_lower_bound_witness(const Poset & f, int k, int n_max, const SweepOptions & options = {}) -> std::optional<Poset>;
auto search_witness(const Poset & f, int k, int n_max, const WitnessSearchOptions & options) -> WitnessSearchResult;

struct Theorem3Row {
    std::string f_name;
    /// "theorem3" or "theorem3_dual".
    std::string construction;
    std::size_t posets_checked = 0;
    std::vector<CanonicalForm> failures;
    /// Some catalogue member needs exactly two colours against this F.
    bool reaches_two = false;
    std::optional<CanonicalForm> two_witness;
    double seconds = 0;
    bool passed = false;
};

struct Theorem3Sweep {
    int n_max = 0;
    std::vector<Theorem3Row> rows;
    bool passed = false;
};

/// Checks the height-one up-set colouring for y_up and chevron_up, and its
/// dual form for y_down and chevron_down, on every catalogue member with
/// 2 <= |P| <= n_max.
auto verify_theorem3(int n_max, const SweepOptions & options = {}) -> Theorem3Sweep;

struct MinimalsSweep {
    int n_max = 0;
    std::size_t posets_checked = 0;
    std::vector<CanonicalForm> failures;
    bool passed = false;
};

/// minimals_colouring against the 2-antichain pattern on every catalogue
/// member with 2 <= |P| <= n_max.
auto verify_minimals_colouring(int n_max, const SweepOptions & options = {}) -> MinimalsSweep;

struct UnboundednessRow {
    int n = 0;
    int big_n = 0;
    int expected = 0;
    int antichain_value = 0;
    int chain_value = 0;
    bool holds = false;
};

/// min_colours of the N-antichain against the n-antichain and of the N-chain
/// against the n-chain, both compared with ceil(N / (n - 2)).
auto unboundedness_row(int n, int big_n) -> UnboundednessRow;
auto unboundedness_check(int n, int big_n) -> bool;

} // namespace chiac
