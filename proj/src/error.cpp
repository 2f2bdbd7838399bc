#include "gpc/error.hpp"

namespace gpc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotOnCircle: return "NotOnCircle";
    case ErrorKind::PoleOfParametrization: return "PoleOfParametrization";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::SingularQuartic: return "SingularQuartic";
    case ErrorKind::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorKind::DegenerateRatio: return "DegenerateRatio";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorKind::NoInfiniteOrderPointFound: return "NoInfiniteOrderPointFound";
    case ErrorKind::IsomorphismNotFound: return "IsomorphismNotFound";
    }
    return "Unknown";
}

} // namespace gpc
