#pragma once

#include <chiac/poset.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace chiac {

/// Malformed poset input. line() is 1-based, or 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & source, int line, const std::string & message);

    auto line() const -> int { return line_; }

private:
    int line_;
};

/// Reads the text format
///
///     poset <name>
///     elements <n>
///     covers
///     <i> <j>
///     ...
///
/// Blank lines and `#` comments are ignored; the name is optional. A JSON
/// object with `elements` and `covers` fields (as written by `show --json`)
/// is accepted too. Pairs are closed transitively; a cyclic input throws
/// CycleError.
auto parse_poset(std::istream & in, const std::string & source = "<input>") -> Poset;

auto read_poset_file(const std::string & path) -> Poset;

/// Text format with the cover relation.
auto format_poset(const Poset & p) -> std::string;

/// An explicit `@file:<path>` reads a file. Otherwise an existing file wins,
/// then a named poset (`chain:4`, `diamond`, ...). Throws ParseError for
/// anything unresolvable.
auto resolve_poset(const std::string & spec) -> Poset;

} // namespace chiac
