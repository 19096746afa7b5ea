#include <chiac/named.hpp>
#include <chiac/poset_io.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace chiac {

ParseError::ParseError(const std::string & source, int line, const std::string & message) :
    std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string{}) + ": " + message),
    line_(line)
{
}

namespace {
    auto trim(std::string s) -> std::string
    {
        auto begin = s.find_first_not_of(" \t\r\n");
        if (begin == std::string::npos)
            return {};
        auto end = s.find_last_not_of(" \t\r\n");
        return s.substr(begin, end - begin + 1);
    }

    auto parse_json(const std::string & text, const std::string & source) -> Poset
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
        }
        if (! doc.is_object() || ! doc.contains("elements") || ! doc["elements"].is_number_integer())
            throw ParseError(source, 0, "JSON poset needs an integer 'elements' field");
        int n = doc["elements"].get<int>();
        std::vector<Relation> pairs;
        if (doc.contains("covers")) {
            if (! doc["covers"].is_array())
                throw ParseError(source, 0, "'covers' must be an array of [lower, upper] pairs");
            for (auto & pair : doc["covers"]) {
                if (! pair.is_array() || pair.size() != 2 || ! pair[0].is_number_integer() || ! pair[1].is_number_integer())
                    throw ParseError(source, 0, "'covers' entries must be [lower, upper] integer pairs");
                pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
        }
        std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : std::string{};
        try {
            return Poset::from_relations(n, pairs, name);
        }
        catch (const CycleError & e) {
            throw CycleError(source + ": " + e.what());
        }
        catch (const std::exception & e) {
            throw ParseError(source, 0, e.what());
        }
    }
}

auto parse_poset(std::istream & in, const std::string & source) -> Poset
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (auto first = text.find_first_not_of(" \t\r\n"); first != std::string::npos && text[first] == '{')
        return parse_json(text, source);

    enum class Expect { header, elements, covers, pairs } expect = Expect::header;
    std::string name;
    int n = 0;
    std::vector<Relation> pairs;

    std::istringstream lines(text);
    std::string raw;
    int line_number = 0;
    while (std::getline(lines, raw)) {
        ++line_number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto line = trim(raw);
        if (line.empty())
            continue;

        std::istringstream words(line);
        std::string keyword;
        words >> keyword;
        switch (expect) {
        case Expect::header:
            if (keyword != "poset")
                throw ParseError(source, line_number, "expected 'poset <name>', found '" + line + "'");
            name = trim(line.substr(keyword.size()));
            expect = Expect::elements;
            break;

        case Expect::elements: {
            if (keyword != "elements")
                throw ParseError(source, line_number, "expected 'elements <n>', found '" + line + "'");
            std::string rest;
            if (! (words >> n) || (words >> rest) || n < 1 || n > max_elements)
                throw ParseError(source, line_number, "element count must be an integer in 1.." + std::to_string(max_elements));
            expect = Expect::covers;
            break;
        }

        case Expect::covers:
            if (line != "covers")
                throw ParseError(source, line_number, "expected 'covers', found '" + line + "'");
            expect = Expect::pairs;
            break;

        case Expect::pairs: {
            std::istringstream pair_words(line);
            int i = 0, j = 0;
            std::string rest;
            if (! (pair_words >> i >> j) || (pair_words >> rest))
                throw ParseError(source, line_number, "expected '<lower> <upper>', found '" + line + "'");
            if (i < 0 || i >= n || j < 0 || j >= n)
                throw ParseError(source, line_number, "element index out of range 0.." + std::to_string(n - 1));
            if (i == j)
                throw CycleError(source + ":" + std::to_string(line_number) + ": element " + std::to_string(i) + " below itself");
            pairs.emplace_back(i, j);
            break;
        }
        }
    }

    if (expect != Expect::pairs)
        throw ParseError(source, line_number, "unexpected end of input: missing "
            + std::string(expect == Expect::header ? "'poset' header" : expect == Expect::elements ? "'elements' line" : "'covers' line"));

    try {
        return Poset::from_relations(n, pairs, name);
    }
    catch (const CycleError & e) {
        throw CycleError(source + ": " + e.what());
    }
}

auto read_poset_file(const std::string & path) -> Poset
{
    std::ifstream in(path);
    if (! in)
        throw ParseError(path, 0, "cannot open file");
    return parse_poset(in, path);
}

auto format_poset(const Poset & p) -> std::string
{
    std::ostringstream out;
    out << "poset";
    if (! p.name().empty())
        out << ' ' << p.name();
    out << "\nelements " << p.size() << "\ncovers\n";
    for (auto [i, j] : covers(p))
        out << i << ' ' << j << '\n';
    return out.str();
}

auto resolve_poset(const std::string & spec) -> Poset
{
    static constexpr std::string_view file_prefix = "@file:";
    if (spec.starts_with(file_prefix))
        return read_poset_file(spec.substr(file_prefix.size()));

    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec))
        return read_poset_file(spec);

    std::optional<Poset> named;
    try {
        named = named_poset(spec);
    }
    catch (const std::invalid_argument & e) {
        throw ParseError(spec, 0, e.what());
    }
    if (! named)
        throw ParseError(spec, 0, "neither a readable file nor a known poset name");
    return *named;
}

} // namespace chiac
