#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpc {

enum class ErrorKind {
    ZeroDenominator,
    NegativeInput,
    ParseError,
    NotOnCircle,
    PoleOfParametrization,
    TooShort,
    InvalidSequence,
    SingularCurve,
    PointNotOnCurve,
    SingularQuartic,
    ExceptionalPoint,
    DegenerateRatio,
    DegenerateParameter,
    DegenerateInput,
    ExhaustedAttempts,
    NoInfiniteOrderPointFound,
    IsomorphismNotFound,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported as an Error carrying its kind, so callers
// (the CLI in particular) can map failures to exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gpc
