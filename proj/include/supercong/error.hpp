#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

enum class ErrorCode {
    InvalidArgument,
    NotInvertible,
    NotPAdicInteger,
    IndexOutOfRange,
    CapExceeded,
    LowerParameterPole,
    NonUnitDenominator,
    HypothesisFailed,
    OddInput,
    Parse,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace supercong
