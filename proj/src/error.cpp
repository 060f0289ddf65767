#include "supercong/error.hpp"

namespace supercong {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotPAdicInteger: return "NotPAdicInteger";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::LowerParameterPole: return "LowerParameterPole";
        case ErrorCode::NonUnitDenominator: return "NonUnitDenominator";
        case ErrorCode::HypothesisFailed: return "HypothesisFailed";
        case ErrorCode::OddInput: return "OddInput";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace supercong
