#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "propb/error.hpp"
#include "propb/hypergraph.hpp"

namespace propb {

/// Text format:
///
///     # comment
///     n p m
///     v1 v2 ... vn      (m lines, 0-based vertex ids)
///
/// Blank lines and lines starting with '#' are ignored everywhere.
class ParseFailure : public Error {
public:
    ParseFailure(std::size_t line, const std::string& what)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what)
        , line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Hypergraph parse_hypergraph(std::string_view text);

Hypergraph read_hypergraph_file(const std::filesystem::path& path);

std::string render_hypergraph(const Hypergraph& h);

} // namespace propb
