#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bouillabaisse {

enum class ErrorCode {
    DivisionByZero,
    BoundaryRoot,
    DimensionMismatch,
    NegativeEntry,
    NotPrimitive,
    DegreeTooLarge,
    FieldMismatch,
    NotIrreducible,
    ZeroConstantTerm,
    SingularSystem,
    AsymmetryDetected,
    ZeroRowOrColumn,
    NonPositiveModulus,
    NotMonicInteger,
    NotUnimodular,
    PreconditionFailed,
    LambdaNotGreaterThanOne,
    NOutOfRange,
    ParseError,
    InvalidInput,
    InternalInconsistency,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure the library reports is an Error carrying a stable code.
/// InternalInconsistency is reserved for outcomes that would contradict a
/// proven theorem; callers treat it differently from bad input.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bouillabaisse
