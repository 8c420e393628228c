#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motzkin {

enum class ErrorCode {
    NegativeAltitude,
    StepTooLarge,
    EmptyPath,
    CapExceeded,
    InvalidParams,
    TruncationInsufficient,
    InvalidGrid,
    OutOfSupport,
    QuadratureNotConverged,
    ConditionViolated,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI, the identity suite) can map it without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace motzkin
