#include "cli.hpp"
#include "report_json.hpp"

#include <chiac/brute_force.hpp>
#include <chiac/canonical.hpp>
#include <chiac/catalogue.hpp>
#include <chiac/colouring.hpp>
#include <chiac/embedding.hpp>
#include <chiac/free_family.hpp>
#include <chiac/named.hpp>
#include <chiac/paper_table.hpp>
#include <chiac/poset_io.hpp>
#include <chiac/store.hpp>
#include <chiac/sweep.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

namespace chiac::cli {

using nlohmann::json;

namespace {
    auto set_text(Mask m) -> std::string
    {
        std::string result = "{";
        bool first = true;
        for (int x : elements_of(m)) {
            result += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        return result + "}";
    }

    auto colouring_text(const Colouring & c) -> std::string
    {
        std::string result = "(";
        for (std::size_t i = 0; i < c.colours.size(); ++i)
            result += (i ? "," : "") + std::to_string(c.colours[i]);
        return result + ")";
    }

    auto display_name(const Poset & p) -> std::string
    {
        return p.name().empty() ? canonical_form(p).hex() : p.name();
    }

    struct Options {
        int threads = 0;
        bool json = false;
        std::string p_spec, f_spec;
        bool include_singletons = false;
        bool all_copies = false;
        std::string method;
        int max_size = 6;
        std::string out_path;
        bool no_cache = false;
        int colours = 0;
        bool resume = false;
        int bound = 0;
        int catalogue_size = 0;
        bool list = false;
    };

    auto cmd_show(const Options & o, std::ostream & out) -> int
    {
        auto p = resolve_poset(o.p_spec);
        auto h = heights(p);
        if (o.json) {
            auto doc = poset_json(p);
            doc["heights"] = h;
            doc["minimals"] = elements_json(minimals(p));
            doc["maximals"] = elements_json(maximals(p));
            doc["bounded"] = is_bounded(p);
            doc["isolated"] = elements_json(isolated_elements(p));
            doc["splitting"] = elements_json(splitting_elements(p));
            doc["interior_splitting"] = elements_json(interior_splitting_elements(p));
            doc["interior_splitting_definition"] = interior_splitting_definition;
            doc["canonical_form"] = canonical_form(p).hex();
            out << doc.dump(2) << '\n';
            return success;
        }

        out << "poset " << p.name() << '\n' << "elements " << p.size() << '\n' << "covers";
        for (auto [i, j] : covers(p))
            out << " (" << i << ',' << j << ')';
        out << "\nheights";
        for (int x : h)
            out << ' ' << x;
        out << "\nminimals " << set_text(minimals(p)) << "\nmaximals " << set_text(maximals(p))
            << "\nbounded " << std::boolalpha << is_bounded(p)
            << "\nisolated " << set_text(isolated_elements(p))
            << "\nsplitting " << set_text(splitting_elements(p))
            << "\ninterior_splitting " << set_text(interior_splitting_elements(p))
            << "  # " << interior_splitting_definition
            << "\ncanonical_form " << canonical_form(p).hex() << '\n';
        return success;
    }

    auto cmd_embed(const Options & o, std::ostream & out) -> int
    {
        auto p = resolve_poset(o.p_spec);
        auto f = resolve_poset(o.f_spec);
        auto embedding = find_embedding(p, f);
        json doc = {{"contains", embedding.has_value()}};
        if (embedding)
            doc["embedding"] = *embedding;
        std::vector<Mask> copies;
        if (o.all_copies) {
            copies = enumerate_copies(p, f);
            json sets = json::array();
            for (auto c : copies)
                sets.push_back(elements_json(c));
            doc["copies"] = sets;
        }

        if (o.json) {
            out << doc.dump(2) << '\n';
            return success;
        }
        out << "contains " << std::boolalpha << embedding.has_value() << '\n';
        if (embedding) {
            out << "embedding";
            for (std::size_t x = 0; x < embedding->size(); ++x)
                out << ' ' << x << "->" << (*embedding)[x];
            out << '\n';
        }
        if (o.all_copies) {
            out << "copies " << copies.size() << '\n';
            for (auto c : copies)
                out << set_text(c) << '\n';
        }
        return success;
    }

    auto cmd_maximal_free(const Options & o, std::ostream & out) -> int
    {
        auto p = resolve_poset(o.p_spec);
        auto f = resolve_poset(o.f_spec);
        auto family = maximal_free(p, f, ! o.include_singletons);
        if (o.json) {
            out << family_json(family).dump(2) << '\n';
            return success;
        }
        out << "[";
        for (std::size_t i = 0; i < family.sets.size(); ++i) {
            auto members = elements_of(family.sets[i]);
            out << (i ? "," : "") << "[";
            for (std::size_t j = 0; j < members.size(); ++j)
                out << (j ? "," : "") << members[j];
            out << "]";
        }
        out << "]\n";
        return success;
    }

    auto cmd_mincolours(const Options & o, std::ostream & out) -> int
    {
        auto p = resolve_poset(o.p_spec);
        auto f = resolve_poset(o.f_spec);
        auto result = min_colours(p, f);
        if (o.json) {
            out << json{{"min_colours", result.min_colours}, {"witness", result.witness.colours},
                           {"family_size", result.family_size}}.dump(2)
                << '\n';
            return success;
        }
        out << "min_colours " << result.min_colours << "\nwitness " << colouring_text(result.witness)
            << "\nfamily_size " << result.family_size << '\n';
        return success;
    }

    auto cmd_colour(const Options & o, std::ostream & out) -> int
    {
        auto p = resolve_poset(o.p_spec);
        auto f = resolve_poset(o.f_spec);
        Colouring c;
        if (o.method == "theorem3")
            c = theorem3_colouring(p, f);
        else if (o.method == "theorem3-dual")
            c = theorem3_dual_colouring(p, f);
        else
            c = minimals_colouring(p);
        bool valid = is_valid(p, f, c);

        if (o.json)
            out << json{{"method", o.method}, {"colouring", c.colours}, {"valid", valid}}.dump(2) << '\n';
        else
            out << "method " << o.method << "\ncolouring " << colouring_text(c) << "\nvalid " << std::boolalpha << valid << '\n';
        return valid ? success : verification_failure;
    }

    auto cmd_hypotheses(const Options & o, std::ostream & out) -> int
    {
        auto f = resolve_poset(o.f_spec);
        auto r = hypothesis_report(f);
        auto bound = chi_ac_upper_from_theorems(f);
        if (o.json) {
            auto doc = hypotheses_json(r);
            doc["theorem_bound"] = theorem_bound_json(bound);
            out << doc.dump(2) << '\n';
            return success;
        }
        auto doc = hypotheses_json(r);
        for (auto & [key, value] : doc.items())
            if (value.is_boolean())
                out << key << ' ' << std::boolalpha << value.get<bool>() << '\n';
        out << "interior_splitting_definition " << interior_splitting_definition << '\n';
        if (bound)
            out << "upper_bound " << bound->bound << " via " << to_string(bound->source) << '\n';
        else
            out << "upper_bound none\n";
        return success;
    }

    auto cmd_catalogue(const Options & o, std::ostream & out) -> int
    {
        if (o.catalogue_size < 1)
            throw std::invalid_argument("catalogue size must be at least 1");
        if (o.catalogue_size > 8)
            std::clog << "warning: catalogues beyond 8 elements take a long time\n";
        const auto & cat = catalogue(o.catalogue_size);
        auto published = published_poset_count(o.catalogue_size);
        if (o.json) {
            json members = json::array();
            if (o.list)
                for (auto & p : cat.members)
                    members.push_back(poset_json(p));
            out << json{{"size", cat.size}, {"count", cat.members.size()},
                           {"published", published ? json(*published) : json(nullptr)}, {"members", members}}.dump(2)
                << '\n';
            return success;
        }
        out << "size " << cat.size << "\ncount " << cat.members.size() << '\n';
        if (published)
            out << "published " << *published << '\n';
        if (o.list)
            for (auto & p : cat.members)
                out << canonical_form(p).hex() << '\n';
        return success;
    }

    auto sweep_options(const Options & o, std::optional<ResultCache> & cache) -> SweepOptions
    {
        SweepOptions options;
        options.threads = o.threads;
        if (! o.no_cache) {
            cache.emplace(default_store_root());
            options.cache = &*cache;
        }
        return options;
    }

    auto cmd_sweep(const Options & o, std::ostream & out) -> int
    {
        auto f = resolve_poset(o.f_spec);
        std::optional<ResultCache> cache;
        auto options = sweep_options(o, cache);
        auto report = o.bound > 0 ? verify_upper_bound(f, o.bound, o.max_size, options)
                                  : sweep_min_colours(f, o.max_size, options);
        if (o.json)
            out << sweep_json(report).dump(2) << '\n';
        else {
            out << "f " << report.f_name << "\nmax_observed " << report.max_observed << "\nposets_checked "
                << report.posets_checked << "\nargmax_count " << report.argmax_count << '\n';
            for (auto & form : report.argmax)
                out << "argmax " << form.hex() << '\n';
            if (report.bound_claimed)
                out << "bound " << *report.bound_claimed << (report.passed ? " holds" : " VIOLATED") << '\n';
        }
        return report.passed ? success : verification_failure;
    }

    auto cmd_search_witness(const Options & o, std::ostream & out) -> int
    {
        if (o.colours < 2)
            throw std::invalid_argument("--colours must be at least 2");
        auto f = resolve_poset(o.f_spec);
        std::optional<ResultCache> cache;
        WitnessSearchOptions options;
        options.sweep = sweep_options(o, cache);
        CheckpointStore checkpoints(default_store_root());
        options.checkpoints = &checkpoints;
        options.resume = o.resume;
        auto result = search_witness(f, o.colours, o.max_size, options);

        std::optional<bool> certified;
        if (result.witness && result.witness->size() <= 10) {
            auto family = brute::maximal_free(*result.witness, f, true);
            certified = ! brute::colourable(result.witness->size(), family.sets, o.colours - 1);
        }

        if (o.json) {
            auto doc = witness_search_json(result, o.colours);
            doc["certified"] = certified ? json(*certified) : json(nullptr);
            out << doc.dump(2) << '\n';
        }
        else if (result.witness) {
            auto name = identify(*result.witness);
            out << "witness found: " << result.witness->size() << " elements"
                << (name ? " (isomorphic to " + *name + ")" : std::string{}) << '\n'
                << format_poset(*result.witness);
            if (certified)
                out << "certification: brute force over all " << (o.colours - 1) << "^" << result.witness->size()
                    << " colourings " << (*certified ? "finds none valid" : "FOUND A VALID ONE") << '\n';
        }
        else
            out << "none within bounds: no poset with at most " << o.max_size << " elements needs " << o.colours
                << " colours against " << display_name(f) << '\n';
        return certified.value_or(true) ? success : verification_failure;
    }

    auto cmd_verify_paper(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        if (o.max_size < 4)
            throw std::invalid_argument("--max-size must be at least 4");
        auto start = std::chrono::steady_clock::now();
        std::optional<ResultCache> cache;
        PaperTableOptions table_options;
        table_options.sweep = sweep_options(o, cache);
        CheckpointStore checkpoints(default_store_root());
        table_options.checkpoints = &checkpoints;
        table_options.unboundedness_max_n = std::max(9, o.max_size);

        bool consistent = true;
        std::vector<std::string> offences;

        json counts = json::object();
        for (int n = 1; n <= o.max_size; ++n) {
            auto generated = catalogue(n).members.size();
            auto published = published_poset_count(n);
            std::optional<std::size_t> second;
            if (n <= 7)
                second = generate_forms_by_filtering(n).size();
            bool agree = (! published || *published == generated) && (! second || *second == generated);
            if (! agree) {
                consistent = false;
                offences.push_back("catalogue count mismatch at n=" + std::to_string(n));
            }
            counts[std::to_string(n)] = {
                {"generated", generated},
                {"second_strategy", second ? json(*second) : json(nullptr)},
                {"published", published ? json(*published) : json(nullptr)},
                {"agree", agree},
            };
        }

        auto table = paper_table(o.max_size, table_options);
        json claims = json::array();
        for (auto & row : table.rows) {
            claims.push_back(claim_row_json(row));
            if (! row.consistent) {
                consistent = false;
                std::string forms;
                for (auto & form : row.sweep.argmax)
                    forms += " P=" + form.hex();
                for (auto & problem : row.problems)
                    offences.push_back("F=" + row.f_name + " (" + canonical_form(registry_poset(row.f_name)).hex() + "): "
                        + problem + forms);
            }
        }

        auto t3 = verify_theorem3(o.max_size, table_options.sweep);
        for (auto & row : t3.rows) {
            for (auto & form : row.failures)
                offences.push_back(row.construction + " colouring invalid: F=" + row.f_name + " P=" + form.hex());
            if (! row.reaches_two)
                offences.push_back("F=" + row.f_name + ": no catalogue member needs two colours");
        }
        consistent = consistent && t3.passed;

        json unbounded = json::array();
        for (int n = 3; n <= 5; ++n)
            for (int big_n = n; big_n <= table_options.unboundedness_max_n; ++big_n) {
                auto row = unboundedness_row(n, big_n);
                unbounded.push_back(unboundedness_json(row));
                if (! row.holds) {
                    consistent = false;
                    offences.push_back("unboundedness formula fails at n=" + std::to_string(n) + " N=" + std::to_string(big_n));
                }
            }

        auto minimals_sweep = verify_minimals_colouring(o.max_size, table_options.sweep);
        for (auto & form : minimals_sweep.failures)
            offences.push_back("minimals colouring invalid: F=antichain:2 P=" + form.hex());
        consistent = consistent && minimals_sweep.passed;

        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json report = {
            {"max_size", o.max_size},
            {"claims", claims},
            {"catalogue_counts", counts},
            {"theorem3_sweep", theorem3_json(t3)},
            {"unboundedness", unbounded},
            {"minimals_sweep", minimals_json(minimals_sweep)},
            {"interior_splitting_definition", interior_splitting_definition},
            {"consistent", consistent},
            {"elapsed_seconds", elapsed},
        };
        if (! o.out_path.empty())
            write_atomically(o.out_path, report.dump(2) + "\n");

        for (int n = 1; n <= o.max_size; ++n)
            out << "catalogue n=" << n << ": " << counts[std::to_string(n)]["generated"].get<std::size_t>() << " classes\n";
        for (auto & row : table.rows) {
            out << std::left << std::setw(20) << row.f_name << " claimed " << std::setw(9) << row.status.label()
                << " swept_max " << row.sweep.max_observed;
            if (row.witness_search)
                out << "  witness(k=" << row.witness_k << "): "
                    << (row.witness_search->witness ? canonical_form(*row.witness_search->witness).hex() : "none within bounds");
            out << "  " << (row.consistent ? "consistent" : "INCONSISTENT") << '\n';
        }
        for (auto & row : t3.rows)
            out << row.construction << " sweep F=" << row.f_name << ": " << row.posets_checked << " posets, "
                << row.failures.size() << " failures\n";
        out << "minimals sweep: " << minimals_sweep.posets_checked << " posets, " << minimals_sweep.failures.size()
            << " failures\n";
        out << "verdict " << (consistent ? "consistent" : "INCONSISTENT") << " (" << std::fixed << std::setprecision(2)
            << elapsed << " s)\n";

        for (auto & offence : offences)
            err << "inconsistent: " << offence << '\n';
        return consistent ? success : verification_failure;
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Maximal F-free subsets and their non-monochromatic colourings of finite posets", "chiac"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--threads", o.threads, "Cap on worker threads (0: one per hardware thread)")->check(CLI::NonNegativeNumber);

    auto add_json = [&](CLI::App * sub) { sub->add_flag("--json", o.json, "Emit JSON"); };
    const std::string poset_help = "Poset file, @file:<path>, or name (chain:<n>, antichain:<n>, fence:<n>, diamond, ...)";

    auto * show = app.add_subcommand("show", "Covers, heights and structural flags of a poset");
    show->add_option("poset", o.p_spec, poset_help)->required();
    add_json(show);

    auto * embed = app.add_subcommand("embed", "Decide induced containment of F in P");
    embed->add_option("p", o.p_spec, poset_help)->required();
    embed->add_option("f", o.f_spec, poset_help)->required();
    embed->add_flag("--all", o.all_copies, "List every copy of F in P");
    add_json(embed);

    auto * free_cmd = app.add_subcommand("maximal-free", "Maximal F-free subsets of P");
    free_cmd->add_option("p", o.p_spec, poset_help)->required();
    free_cmd->add_option("f", o.f_spec, poset_help)->required();
    free_cmd->add_flag("--include-singletons", o.include_singletons, "Keep one-element members");
    add_json(free_cmd);

    auto * mincol = app.add_subcommand("mincolours", "Least number of colours leaving no maximal F-free subset monochromatic");
    mincol->add_option("p", o.p_spec, poset_help)->required();
    mincol->add_option("f", o.f_spec, poset_help)->required();
    add_json(mincol);

    auto * colour = app.add_subcommand("colour", "Constructive 2-colouring with a validity check");
    colour->add_option("p", o.p_spec, poset_help)->required();
    colour->add_option("f", o.f_spec, poset_help)->required();
    colour->add_option("--method", o.method, "Construction")
        ->required()
        ->check(CLI::IsMember({"theorem3", "theorem3-dual", "minimals"}));
    add_json(colour);

    auto * hyp = app.add_subcommand("hypotheses", "Hypothesis profile and theorem-implied bound for F");
    hyp->add_option("f", o.f_spec, poset_help)->required();
    add_json(hyp);

    auto * cat = app.add_subcommand("catalogue", "Posets on n elements up to isomorphism");
    cat->add_option("n", o.catalogue_size, "Element count")->required();
    cat->add_flag("--list", o.list, "List canonical forms");
    add_json(cat);

    auto * sweep = app.add_subcommand("sweep", "Maximum of mincolours(P, F) over the catalogue");
    sweep->add_option("f", o.f_spec, poset_help)->required();
    sweep->add_option("--bound", o.bound, "Claimed upper bound to check");
    sweep->add_option("--max-size", o.max_size, "Largest |P|")->check(CLI::Range(2, 10));
    sweep->add_flag("--no-cache", o.no_cache, "Ignore the result cache");
    add_json(sweep);

    auto * verify = app.add_subcommand("verify-paper", "Check every small-pattern claim against exhaustive sweeps");
    verify->add_option("--max-size", o.max_size, "Largest |P| swept")->check(CLI::Range(4, 10));
    verify->add_option("--out", o.out_path, "Write the JSON report here");
    verify->add_flag("--no-cache", o.no_cache, "Ignore the result cache");

    auto * witness = app.add_subcommand("search-witness", "Smallest P needing at least k colours against F");
    witness->add_option("f", o.f_spec, poset_help)->required();
    witness->add_option("--colours", o.colours, "k")->required();
    witness->add_option("--max-size", o.max_size, "Largest |P| searched")->check(CLI::Range(2, 10));
    witness->add_flag("--resume", o.resume, "Continue from the saved checkpoint");
    witness->add_flag("--no-cache", o.no_cache, "Ignore the result cache");
    add_json(witness);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return input_error;
    }

    try {
        if (show->parsed())
            return cmd_show(o, out);
        if (embed->parsed())
            return cmd_embed(o, out);
        if (free_cmd->parsed())
            return cmd_maximal_free(o, out);
        if (mincol->parsed())
            return cmd_mincolours(o, out);
        if (colour->parsed())
            return cmd_colour(o, out);
        if (hyp->parsed())
            return cmd_hypotheses(o, out);
        if (cat->parsed())
            return cmd_catalogue(o, out);
        if (sweep->parsed())
            return cmd_sweep(o, out);
        if (verify->parsed())
            return cmd_verify_paper(o, out, err);
        if (witness->parsed())
            return cmd_search_witness(o, out);
    }
    catch (const HypothesisError & e) {
        err << "error: HypothesisError: " << e.what() << '\n';
        return verification_failure;
    }
    catch (const CycleError & e) {
        err << "error: CycleError: " << e.what() << '\n';
        return input_error;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const IndexError & e) {
        err << "error: IndexError: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace chiac::cli
