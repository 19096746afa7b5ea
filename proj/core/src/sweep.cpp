#include <chiac/catalogue.hpp>
#include <chiac/named.hpp>
#include <chiac/sweep.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace chiac {

namespace {
    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto label(const Poset & f) -> std::string
    {
        return f.name().empty() ? canonical_form(f).hex() : f.name();
    }

    auto plausible(const CachedResult & cached, const Poset & p) -> bool
    {
        if (cached.min_colours < 1 || cached.min_colours > p.size())
            return false;
        if (static_cast<int>(cached.witness.size()) != p.size())
            return false;
        return std::all_of(cached.witness.begin(), cached.witness.end(),
            [&](int c) { return c >= 1 && c <= cached.min_colours; });
    }
}

auto min_colours_cached(const Poset & p, const Poset & f, const SweepOptions & options) -> ChromaticResult
{
    if (! options.cache)
        return min_colours(p, f);

    auto p_form = canonical_form(p);
    if (! (poset_from_form(p_form) == p))
        return min_colours(p, f);
    auto f_form = canonical_form(f);

    auto family = maximal_free(p, f, true);
    if (auto cached = options.cache->load(f_form, p_form)) {
        Colouring witness{cached->witness, cached->min_colours};
        if (plausible(*cached, p) && cached->family_size == family.sets.size() && is_valid(family, witness))
            return ChromaticResult{cached->min_colours, witness, cached->family_size};
        warn("cache entry " + options.cache->path_for(f_form, p_form).string() + " failed revalidation; recomputing");
    }

    auto result = min_colours(p.size(), family);
    options.cache->store(f_form, p_form, CachedResult{result.min_colours, result.witness.colours, result.family_size});
    return result;
}

auto sweep_min_colours(const Poset & f, int n_max, const SweepOptions & options) -> SweepReport
{
    SweepReport report;
    report.f_name = label(f);
    report.n_max = n_max;

    for (int n = 2; n <= n_max; ++n) {
        auto start = Clock::now();
        const auto & members = catalogue(n).members;
        std::vector<int> values(members.size(), 0);
        detail::parallel_for(members.size(), options.threads,
            [&](std::size_t i) { values[i] = min_colours_cached(members[i], f, options).min_colours; });

        for (std::size_t i = 0; i < members.size(); ++i) {
            if (values[i] > report.max_observed) {
                report.max_observed = values[i];
                report.argmax.clear();
                report.argmax_count = 0;
            }
            if (values[i] == report.max_observed) {
                ++report.argmax_count;
                if (report.argmax.size() < max_reported_argmax)
                    report.argmax.push_back(canonical_form(members[i]));
            }
        }
        report.posets_checked += members.size();
        report.timing.push_back(SizeTiming{n, members.size(), seconds_since(start)});
    }
    return report;
}

auto verify_upper_bound(const Poset & f, int bound, int n_max, const SweepOptions & options) -> SweepReport
{
    if (bound < 1)
        throw std::invalid_argument("claimed bound must be at least 1");
    auto report = sweep_min_colours(f, n_max, options);
    report.bound_claimed = bound;
    report.passed = report.max_observed <= bound;
    return report;
}

auto witness_job_id(const Poset & f, int k) -> std::string
{
    return "witness-" + canonical_form(f).hex() + "-k" + std::to_string(k);
}

auto search_witness(const Poset & f, int k, int n_max, const WitnessSearchOptions & options) -> WitnessSearchResult
{
    if (k < 2)
        throw std::invalid_argument("witness searches need k >= 2");

    WitnessSearchResult result;
    result.job_id = witness_job_id(f, k);
    result.n_max = n_max;

    Checkpoint checkpoint{result.job_id, {}, {}, std::nullopt};
    if (options.checkpoints && options.resume) {
        if (auto saved = options.checkpoints->load(result.job_id)) {
            checkpoint = *saved;
            result.resumed = true;
            if (checkpoint.witness) {
                result.witness = poset_from_form(CanonicalForm::from_hex(*checkpoint.witness));
                return result;
            }
        }
    }
    auto save = [&] {
        if (options.checkpoints)
            options.checkpoints->save(checkpoint);
    };

    // A filtered family on n elements never needs more than n colours.
    for (int n = std::max(2, k); n <= n_max; ++n) {
        if (std::find(checkpoint.completed_sizes.begin(), checkpoint.completed_sizes.end(), n) != checkpoint.completed_sizes.end())
            continue;

        const auto & members = catalogue(n).members;
        std::size_t begin = 0;
        if (auto it = checkpoint.last_processed.find(n); it != checkpoint.last_processed.end()) {
            auto last = CanonicalForm::from_hex(it->second);
            while (begin < members.size() && canonical_form(members[begin]) <= last)
                ++begin;
        }

        for (std::size_t chunk_start = begin; chunk_start < members.size(); chunk_start += options.chunk) {
            std::size_t chunk_end = std::min(members.size(), chunk_start + options.chunk);
            std::vector<char> needs_k(chunk_end - chunk_start, 0);
            detail::parallel_for(needs_k.size(), options.sweep.threads, [&](std::size_t i) {
                const auto & p = members[chunk_start + i];
                auto family = maximal_free(p, f, true);
                needs_k[i] = ! colourable(p.size(), family.sets, k - 1);
            });
            result.posets_checked += needs_k.size();

            auto hit = std::find(needs_k.begin(), needs_k.end(), 1);
            if (hit != needs_k.end()) {
                const auto & witness = members[chunk_start + static_cast<std::size_t>(hit - needs_k.begin())];
                result.witness = witness;
                checkpoint.witness = canonical_form(witness).hex();
                save();
                return result;
            }
            checkpoint.last_processed[n] = canonical_form(members[chunk_end - 1]).hex();
            save();
        }

        checkpoint.last_processed.erase(n);
        checkpoint.completed_sizes.push_back(n);
        save();
    }
    return result;
}

auto search_lower_bound_witness(const Poset & f, int k, int n_max, const SweepOptions & options) -> std::optional<Poset>
{
    WitnessSearchOptions search_options;
    search_options.sweep = options;
    return search_witness(f, k, n_max, search_options).witness;
}

auto verify_theorem3(int n_max, const SweepOptions & options) -> Theorem3Sweep
{
    if (n_max < 2)
        throw std::invalid_argument("theorem3 sweep needs n_max >= 2");

    struct Target {
        const char * name;
        bool dual_form;
    };
    static constexpr Target targets[] = {
        {"y_up", false}, {"chevron_up", false}, {"y_down", true}, {"chevron_down", true}};

    Theorem3Sweep sweep;
    sweep.n_max = n_max;
    sweep.passed = true;
    auto posets = catalogue_range(2, n_max);

    for (auto & target : targets) {
        auto start = Clock::now();
        auto f = registry_poset(target.name);
        Theorem3Row row;
        row.f_name = target.name;
        row.construction = target.dual_form ? "theorem3_dual" : "theorem3";

        std::vector<char> ok(posets.size(), 0);
        detail::parallel_for(posets.size(), options.threads, [&](std::size_t i) {
            const auto & p = *posets[i];
            auto c = target.dual_form ? theorem3_dual_colouring(p, f) : theorem3_colouring(p, f);
            ok[i] = is_valid(p, f, c);
        });
        for (std::size_t i = 0; i < posets.size(); ++i)
            if (! ok[i])
                row.failures.push_back(canonical_form(*posets[i]));
        row.posets_checked = posets.size();

        // Exactness of the value 2: some P must need two colours.
        for (auto * p : posets)
            if (min_colours_cached(*p, f, options).min_colours == 2) {
                row.reaches_two = true;
                row.two_witness = canonical_form(*p);
                break;
            }

        row.passed = row.failures.empty() && row.reaches_two;
        row.seconds = seconds_since(start);
        sweep.passed = sweep.passed && row.passed;
        sweep.rows.push_back(std::move(row));
    }
    return sweep;
}

auto verify_minimals_colouring(int n_max, const SweepOptions & options) -> MinimalsSweep
{
    MinimalsSweep sweep;
    sweep.n_max = n_max;
    auto posets = catalogue_range(2, n_max);
    auto pattern = antichain(2);
    std::vector<char> ok(posets.size(), 0);
    detail::parallel_for(posets.size(), options.threads, [&](std::size_t i) {
        ok[i] = is_valid(*posets[i], pattern, minimals_colouring(*posets[i]));
    });
    for (std::size_t i = 0; i < posets.size(); ++i)
        if (! ok[i])
            sweep.failures.push_back(canonical_form(*posets[i]));
    sweep.posets_checked = posets.size();
    sweep.passed = sweep.failures.empty();
    return sweep;
}

auto unboundedness_row(int n, int big_n) -> UnboundednessRow
{
    if (n < 3 || big_n < n)
        throw std::invalid_argument("unboundedness check needs 3 <= n <= N");
    UnboundednessRow row;
    row.n = n;
    row.big_n = big_n;
    row.expected = (big_n + (n - 2) - 1) / (n - 2);
    row.antichain_value = min_colours(antichain(big_n), antichain(n)).min_colours;
    row.chain_value = min_colours(chain(big_n), chain(n)).min_colours;
    row.holds = row.antichain_value == row.expected && row.chain_value == row.expected;
    return row;
}

auto unboundedness_check(int n, int big_n) -> bool
{
    return unboundedness_row(n, big_n).holds;
}

} // namespace chiac
