#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmc {

enum class ErrorKind {
    DivisionBySingularJet,
    DomainError,
    OrderOutOfRange,
    InsufficientJetDegree,
    DimensionMismatch,
    NotTangent,
    OffManifold,
    DegenerateMetric,
    MinimalPoint,
    NotApplicable,
    BadParameters,
    UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (suite runners, the CLI) can map it onto a status without parsing
/// messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pmc
