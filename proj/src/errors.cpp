#include "maxwist/errors.hpp"

namespace maxwist {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotClawFree: return "NotClawFree";
    case ErrorCode::HasDegreeTwoVertex: return "HasDegreeTwoVertex";
    case ErrorCode::ExactSolveTooLarge: return "ExactSolveTooLarge";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::ResultHasDegreeTwo: return "ResultHasDegreeTwo";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InsufficientCharge: return "InsufficientCharge";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace maxwist
