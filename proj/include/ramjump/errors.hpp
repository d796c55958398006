#pragma once

#include <stdexcept>
#include <string>

namespace ramjump {

// Machine-readable error codes. The CLI maps these to JSON diagnostics and
// exit codes, so the set is part of the tool's external contract.
enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    PrecisionExhausted,
    ExponentNotDivisible,
    InvalidConductor,
    IndexOutOfRange,
    InvalidOrder,
    InvalidIndex,
    NotApplicable,
    DegenerateGroup,
    NotTotallyRamified,
    NotRamified,
    NotReduced,
    MonotonicityViolation,
    InvalidInput,
    ParseError,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::ExponentNotDivisible: return "ExponentNotDivisible";
        case ErrorCode::InvalidConductor: return "InvalidConductor";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::InvalidIndex: return "InvalidIndex";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::DegenerateGroup: return "DegenerateGroup";
        case ErrorCode::NotTotallyRamified: return "NotTotallyRamified";
        case ErrorCode::NotRamified: return "NotRamified";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
          code_(code),
          message_(msg) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }
    const std::string& message() const { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace ramjump
