#include "motzkin/core/errors.hpp"

namespace motzkin {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeAltitude: return "NegativeAltitude";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::EmptyPath: return "EmptyPath";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::OutOfSupport: return "OutOfSupport";
        case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace motzkin
