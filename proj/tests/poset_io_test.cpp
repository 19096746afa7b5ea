#include <chiac/canonical.hpp>
#include <chiac/named.hpp>
#include <chiac/poset_io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chiac;

namespace {

auto parse(const std::string & text) -> Poset
{
    std::istringstream in(text);
    return parse_poset(in, "test");
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path()
            / ("chiac-io-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-"
                + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    auto write(const std::string & name, const std::string & text) const -> std::string
    {
        auto file = path / name;
        std::ofstream(file) << text;
        return file.string();
    }
};

} // namespace

TEST(PosetIo, ParsesTextFormat)
{
    auto p = parse("poset y\n# comment\nelements 4\n\ncovers\n0 2\n1 2  # inline\n2 3\n");
    EXPECT_EQ(p, registry_poset("y_up"));
    EXPECT_EQ(p.name(), "y");
}

TEST(PosetIo, NameIsOptional)
{
    auto p = parse("poset\nelements 2\ncovers\n");
    EXPECT_EQ(p, antichain(2));
}

TEST(PosetIo, ReportsLineNumbers)
{
    try {
        parse("poset x\nelements 2\ncovers\n0 one\n");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 4);
        EXPECT_NE(std::string(e.what()).find("test"), std::string::npos);
    }
    EXPECT_THROW(parse("poset\nelements 2\ncovers\n0 5\n"), ParseError);
    EXPECT_THROW(parse("poset\nelements two\n"), ParseError);
    EXPECT_THROW(parse("elements 2\ncovers\n"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
}

TEST(PosetIo, CyclicInputThrows)
{
    EXPECT_THROW(parse("poset\nelements 3\ncovers\n0 1\n1 2\n2 0\n"), CycleError);
}

TEST(PosetIo, FormatRoundTrips)
{
    for (auto & name : registry_names()) {
        auto p = registry_poset(name);
        EXPECT_EQ(parse(format_poset(p)), p) << name;
    }
}

TEST(PosetIo, JsonInput)
{
    auto p = parse(R"({"elements": 3, "covers": [[0, 1], [1, 2]], "name": "c"})");
    EXPECT_EQ(p, chain(3));
    EXPECT_EQ(parse(R"({"elements": 3})"), antichain(3));
    EXPECT_THROW(parse(R"({"covers": []})"), ParseError);
}

TEST(PosetIo, ResolverPrefersFiles)
{
    TempDir dir;
    auto file = dir.write("diamond", "poset\nelements 2\ncovers\n0 1\n");
    auto cwd = std::filesystem::current_path();
    std::filesystem::current_path(dir.path);
    EXPECT_EQ(resolve_poset("diamond"), chain(2));
    std::filesystem::current_path(cwd);
    EXPECT_EQ(resolve_poset("diamond"), registry_poset("diamond"));
    EXPECT_EQ(resolve_poset("@file:" + file), chain(2));
    EXPECT_THROW(resolve_poset("@file:" + (dir.path / "missing").string()), ParseError);
    EXPECT_THROW(resolve_poset("no_such_poset"), ParseError);
}
