#pragma once

#include <stdexcept>
#include <string>

namespace maxwist {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    NegativeWeight,
    IndexOutOfRange,
    NotCubic,
    NotClawFree,
    HasDegreeTwoVertex,
    ExactSolveTooLarge,
    InvalidEpsilon,
    InvalidN,
    ResultHasDegreeTwo,
    UnknownFamily,
    InsufficientCharge,
    InvariantViolation,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

} // namespace maxwist
