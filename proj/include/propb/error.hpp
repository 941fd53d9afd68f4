#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace propb {

enum class ErrorKind {
    NonUniformEdge,
    VertexOutOfRange,
    InsufficientVertices,
    TooManyEdges,
    InvalidOrdering,
    IncompleteColoring,
    NotSimple,
    BudgetExceeded,
    DegenerateBinomial,
    EqualityStructureViolated,
    FixtureFailure,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; kind() lets callers
// (the CLI in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace propb
