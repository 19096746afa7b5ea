#include "report_json.hpp"

#include <chiac/named.hpp>

namespace chiac::cli {

using nlohmann::json;

auto elements_json(Mask m) -> json
{
    return elements_of(m);
}

auto family_json(const FreeFamily & family) -> json
{
    json sets = json::array();
    for (auto s : family.sets)
        sets.push_back(elements_json(s));
    return json{{"sets", sets}, {"filtered", family.filtered}};
}

auto poset_json(const Poset & p) -> json
{
    json cover_pairs = json::array();
    for (auto [i, j] : covers(p))
        cover_pairs.push_back({i, j});
    json doc = {{"elements", p.size()}, {"covers", cover_pairs}};
    if (! p.name().empty())
        doc["name"] = p.name();
    return doc;
}

auto hypotheses_json(const HypothesisReport & r) -> json
{
    return {
        {"two_minimals", r.two_minimals},
        {"maximals_have_nonminimal_cover", r.maximals_have_nonminimal_cover},
        {"thm3_applies", r.thm3_applies},
        {"thm3_dual_applies", r.thm3_dual_applies},
        {"nonbounded", r.nonbounded},
        {"no_isolated", r.no_isolated},
        {"thm2_applies", r.thm2_applies},
        {"bounded", r.bounded},
        {"no_interior_splitting", r.no_interior_splitting},
        {"thm1_applies", r.thm1_applies},
        {"interior_splitting_definition", interior_splitting_definition},
    };
}

auto theorem_bound_json(const std::optional<TheoremBound> & bound) -> json
{
    if (! bound)
        return nullptr;
    return {{"bound", bound->bound}, {"source", std::string(to_string(bound->source))}};
}

namespace {
    auto forms_json(const std::vector<CanonicalForm> & forms) -> json
    {
        json result = json::array();
        for (auto & f : forms)
            result.push_back(f.hex());
        return result;
    }
}

auto sweep_json(const SweepReport & report) -> json
{
    json timing = json::array();
    for (auto & t : report.timing)
        timing.push_back({{"size", t.size}, {"posets", t.posets}, {"seconds", t.seconds}});
    return {
        {"f_name", report.f_name},
        {"bound_claimed", report.bound_claimed ? json(*report.bound_claimed) : json(nullptr)},
        {"n_max", report.n_max},
        {"max_observed", report.max_observed},
        {"argmax", forms_json(report.argmax)},
        {"argmax_count", report.argmax_count},
        {"posets_checked", report.posets_checked},
        {"timing", timing},
        {"passed", report.passed},
    };
}

auto witness_search_json(const WitnessSearchResult & result, int k) -> json
{
    json doc = {
        {"job_id", result.job_id},
        {"colours", k},
        {"n_max", result.n_max},
        {"posets_checked", result.posets_checked},
        {"resumed", result.resumed},
        {"outcome", result.witness ? "found" : "none_within_bounds"},
    };
    if (result.witness) {
        doc["witness"] = canonical_form(*result.witness).hex();
        doc["witness_poset"] = poset_json(*result.witness);
        if (auto name = identify(*result.witness))
            doc["witness_name"] = *name;
    }
    return doc;
}

auto unboundedness_json(const UnboundednessRow & row) -> json
{
    return {
        {"n", row.n},
        {"big_n", row.big_n},
        {"expected", row.expected},
        {"antichain_min_colours", row.antichain_value},
        {"chain_min_colours", row.chain_value},
        {"holds", row.holds},
    };
}

auto claim_row_json(const ClaimRow & row) -> json
{
    json unbounded = json::array();
    for (auto & u : row.unboundedness)
        unbounded.push_back(unboundedness_json(u));
    return {
        {"f", row.f_name},
        {"f_size", row.f_size},
        {"claimed", row.status.label()},
        {"basis", to_string(row.status.basis)},
        {"lower_bound_gated", row.status.lower_gated},
        {"hypotheses", hypotheses_json(row.hypotheses)},
        {"theorem_bound", theorem_bound_json(row.theorem_bound)},
        {"sweep", sweep_json(row.sweep)},
        {"swept_max", row.sweep.max_observed},
        {"unboundedness", unbounded},
        {"witness_search", row.witness_search ? witness_search_json(*row.witness_search, row.witness_k) : json(nullptr)},
        {"verdict", row.consistent ? "consistent" : "inconsistent"},
        {"problems", row.problems},
    };
}

auto theorem3_json(const Theorem3Sweep & sweep) -> json
{
    json rows = json::array();
    for (auto & r : sweep.rows)
        rows.push_back({
            {"f", r.f_name},
            {"construction", r.construction},
            {"posets_checked", r.posets_checked},
            {"failures", forms_json(r.failures)},
            {"reaches_two", r.reaches_two},
            {"two_witness", r.two_witness ? json(r.two_witness->hex()) : json(nullptr)},
            {"seconds", r.seconds},
            {"passed", r.passed},
        });
    return {{"n_max", sweep.n_max}, {"rows", rows}, {"passed", sweep.passed}};
}

auto minimals_json(const MinimalsSweep & sweep) -> json
{
    return {
        {"n_max", sweep.n_max},
        {"posets_checked", sweep.posets_checked},
        {"failures", forms_json(sweep.failures)},
        {"passed", sweep.passed},
    };
}

} // namespace chiac::cli
