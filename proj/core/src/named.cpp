#include <chiac/canonical.hpp>
#include <chiac/named.hpp>

#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace chiac {

auto chain(int n) -> Poset
{
    std::vector<Relation> pairs;
    for (int i = 0; i + 1 < n; ++i)
        pairs.emplace_back(i, i + 1);
    return Poset::from_relations(n, pairs, "chain:" + std::to_string(n));
}

auto antichain(int n) -> Poset
{
    return Poset::from_relations(n, {}, "antichain:" + std::to_string(n));
}

auto fence(int n) -> Poset
{
    std::vector<Relation> pairs;
    for (int i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0)
            pairs.emplace_back(i, i + 1);
        else
            pairs.emplace_back(i + 1, i);
    }
    return Poset::from_relations(n, pairs, "fence:" + std::to_string(n));
}

namespace {
    struct Entry {
        std::string name;
        int n;
        std::vector<Relation> relations;
    };

    auto entries() -> const std::vector<Entry> &
    {
        static const std::vector<Entry> table = {
            {"v3", 3, {{0, 1}, {0, 2}}},
            {"lambda3", 3, {{0, 2}, {1, 2}}},
            {"chain2_plus_point", 3, {{0, 1}}},

            {"chain4", 4, {{0, 1}, {1, 2}, {2, 3}}},
            {"antichain4", 4, {}},
            {"two_plus_two", 4, {{0, 1}, {2, 3}}},
            {"chain2_plus_2points", 4, {{0, 1}}},
            {"chain3_plus_point", 4, {{0, 1}, {1, 2}}},
            {"claw_up", 4, {{0, 1}, {0, 2}, {0, 3}}},
            {"claw_down", 4, {{0, 3}, {1, 3}, {2, 3}}},
            {"n_poset", 4, {{0, 2}, {1, 2}, {1, 3}}},
            {"k22", 4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}},
            {"diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}},
            {"y_up", 4, {{0, 2}, {1, 2}, {2, 3}}},
            {"y_down", 4, {{0, 1}, {1, 2}, {1, 3}}},
            {"chevron_up", 4, {{0, 1}, {1, 2}, {3, 2}}},
            {"chevron_down", 4, {{0, 1}, {1, 2}, {0, 3}}},
            {"v3_plus_point", 4, {{0, 1}, {0, 2}}},
            {"lambda3_plus_point", 4, {{0, 2}, {1, 2}}},
        };
        return table;
    }

    const std::map<std::string, std::string, std::less<>> aliases = {
        {"2plus2", "two_plus_two"},
    };

    auto parse_size(std::string_view family, std::string_view digits) -> int
    {
        int n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1 || n > max_elements)
            throw std::invalid_argument("bad size '" + std::string(digits) + "' for " + std::string(family)
                + ": expected an integer in 1.." + std::to_string(max_elements));
        return n;
    }
}

auto named_poset(std::string_view name) -> std::optional<Poset>
{
    if (auto colon = name.find(':'); colon != std::string_view::npos) {
        auto family = name.substr(0, colon);
        auto digits = name.substr(colon + 1);
        if (family == "chain")
            return chain(parse_size(family, digits));
        if (family == "antichain")
            return antichain(parse_size(family, digits));
        if (family == "fence")
            return fence(parse_size(family, digits));
        return std::nullopt;
    }

    std::string_view key = name;
    if (auto it = aliases.find(name); it != aliases.end())
        key = it->second;
    for (auto & e : entries())
        if (e.name == key)
            return Poset::from_relations(e.n, e.relations, e.name);
    return std::nullopt;
}

auto registry_names() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> result;
        for (auto & e : entries())
            result.push_back(e.name);
        return result;
    }();
    return names;
}

auto four_element_names() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> result;
        for (auto & e : entries())
            if (e.n == 4)
                result.push_back(e.name);
        return result;
    }();
    return names;
}

auto three_element_names() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names = {"chain:3", "antichain:3", "v3", "lambda3", "chain2_plus_point"};
    return names;
}

auto registry_poset(std::string_view name) -> Poset
{
    if (auto p = named_poset(name))
        return *p;
    throw std::invalid_argument("unknown poset name '" + std::string(name) + "'");
}

auto identify(const Poset & p) -> std::optional<std::string>
{
    auto form = canonical_form(p);
    int n = p.size();
    for (auto & candidate : {chain(n), antichain(n), fence(n)})
        if (canonical_form(candidate) == form)
            return candidate.name();
    for (auto & e : entries())
        if (e.n == n && canonical_form(Poset::from_relations(e.n, e.relations)) == form)
            return e.name;
    return std::nullopt;
}

} // namespace chiac
