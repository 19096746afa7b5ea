#include <chiac/named.hpp>
#include <chiac/paper_table.hpp>

#include <stdexcept>

namespace chiac {

auto ClaimedStatus::label() const -> std::string
{
    switch (kind) {
    case Kind::exact: return "=" + std::to_string(value);
    case Kind::at_most: return "<=" + std::to_string(value);
    case Kind::at_least: return ">=" + std::to_string(value);
    case Kind::unknown: return "unknown";
    case Kind::infinite: return "infinite";
    }
    return "unknown";
}

auto to_string(ClaimedStatus::Basis basis) -> std::string
{
    using B = ClaimedStatus::Basis;
    switch (basis) {
    case B::minimals_colouring: return "minimals_colouring";
    case B::unboundedness: return "unboundedness";
    case B::theorem3: return "theorem3";
    case B::theorem2: return "theorem2";
    case B::theorem1: return "theorem1";
    case B::external: return "external";
    case B::open: return "open";
    }
    return "open";
}

auto claimed_statuses() -> const std::vector<ClaimEntry> &
{
    using K = ClaimedStatus::Kind;
    using B = ClaimedStatus::Basis;
    static const std::vector<ClaimEntry> table = {
        {"antichain:2", {K::exact, 2, B::minimals_colouring, true}},
        {"chain:2", {K::exact, 3, B::external, false}},

        {"chain:3", {K::infinite, 0, B::unboundedness, false}},
        {"antichain:3", {K::infinite, 0, B::unboundedness, false}},
        {"v3", {K::exact, 3, B::external, false}},
        {"lambda3", {K::exact, 3, B::external, false}},
        {"chain2_plus_point", {K::at_least, 4, B::external, false}},

        {"chain4", {K::infinite, 0, B::unboundedness, false}},
        {"antichain4", {K::infinite, 0, B::unboundedness, false}},
        {"two_plus_two", {K::exact, 2, B::external, true}},
        {"y_up", {K::exact, 2, B::theorem3, true}},
        {"chevron_up", {K::exact, 2, B::theorem3, true}},
        {"y_down", {K::exact, 2, B::theorem3, true}},
        {"chevron_down", {K::exact, 2, B::theorem3, true}},
        {"n_poset", {K::at_most, 3, B::theorem2, false}},
        {"k22", {K::at_most, 3, B::theorem2, false}},
        {"claw_up", {K::at_most, 3, B::theorem2, false}},
        {"claw_down", {K::at_most, 3, B::theorem2, false}},
        {"diamond", {K::at_most, 10, B::theorem1, false}},
        {"chain2_plus_2points", {K::unknown, 0, B::open, false}},
        {"chain3_plus_point", {K::unknown, 0, B::open, false}},
        {"v3_plus_point", {K::unknown, 0, B::open, false}},
        {"lambda3_plus_point", {K::unknown, 0, B::open, false}},
    };
    return table;
}

namespace {
    auto evaluate(const ClaimEntry & entry, int n_max, const PaperTableOptions & options) -> ClaimRow
    {
        using K = ClaimedStatus::Kind;
        using B = ClaimedStatus::Basis;

        auto f = registry_poset(entry.f_name);
        ClaimRow row;
        row.f_name = entry.f_name;
        row.f_size = f.size();
        row.status = entry.status;
        row.hypotheses = hypothesis_report(f);
        row.theorem_bound = chi_ac_upper_from_theorems(f);
        row.sweep = sweep_min_colours(f, n_max, options.sweep);

        auto & problems = row.problems;
        auto & status = entry.status;
        auto observed = row.sweep.max_observed;

        if ((status.kind == K::exact || status.kind == K::at_most) && observed > status.value)
            problems.push_back("swept maximum " + std::to_string(observed) + " exceeds claimed " + status.label());
        if (status.kind == K::exact && status.lower_gated && observed < status.value)
            problems.push_back("no catalogue member reaches claimed " + status.label());
        if (row.theorem_bound && status.kind == K::exact && row.theorem_bound->bound < status.value)
            problems.push_back("theorem-implied bound " + std::to_string(row.theorem_bound->bound) + " is below claimed " + status.label());
        if (row.theorem_bound && row.theorem_bound->bound < observed)
            problems.push_back("swept maximum " + std::to_string(observed) + " exceeds theorem-implied bound "
                + std::to_string(row.theorem_bound->bound));

        switch (status.basis) {
        case B::theorem3:
            if (! row.hypotheses.thm3_applies && ! row.hypotheses.thm3_dual_applies)
                problems.push_back("claimed via theorem3 but neither it nor its dual applies");
            break;
        case B::theorem2:
            if (! row.hypotheses.thm2_applies)
                problems.push_back("claimed via theorem2 but its hypothesis fails");
            break;
        case B::theorem1:
            if (! row.hypotheses.thm1_applies)
                problems.push_back("claimed via theorem1 but its hypothesis fails");
            break;
        default:
            break;
        }

        if ((status.kind == K::infinite || status.kind == K::unknown) && row.theorem_bound)
            problems.push_back("claimed " + status.label() + " but " + std::string(to_string(row.theorem_bound->source))
                + " gives a finite bound");
        if (status.kind == K::at_least && row.theorem_bound && row.theorem_bound->bound < status.value)
            problems.push_back("claimed " + status.label() + " contradicts theorem-implied bound "
                + std::to_string(row.theorem_bound->bound));

        if (status.kind == K::infinite) {
            for (int big_n = f.size(); big_n <= std::max(options.unboundedness_max_n, f.size()); ++big_n) {
                auto u = unboundedness_row(f.size(), big_n);
                if (! u.holds)
                    problems.push_back("unboundedness formula fails at N=" + std::to_string(big_n));
                row.unboundedness.push_back(u);
            }
        }

        // Lower bounds that rest on witnesses outside this table are searched
        // for and reported, never gated.
        bool reported_lower = (status.kind == K::exact && ! status.lower_gated) || status.kind == K::at_least;
        if (reported_lower) {
            row.witness_k = status.value;
            WitnessSearchOptions search;
            search.sweep = options.sweep;
            search.checkpoints = options.checkpoints;
            search.resume = options.resume;
            row.witness_search = search_witness(f, status.value, n_max, search);
        }

        row.consistent = problems.empty();
        return row;
    }
}

auto paper_table(int n_max, const PaperTableOptions & options) -> PaperTable
{
    if (n_max < 4)
        throw std::invalid_argument("status table needs n_max >= 4");
    PaperTable table;
    table.n_max = n_max;
    table.consistent = true;
    for (auto & entry : claimed_statuses()) {
        table.rows.push_back(evaluate(entry, n_max, options));
        table.consistent = table.consistent && table.rows.back().consistent;
    }
    return table;
}

} // namespace chiac
