#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::BoundaryRoot: return "BoundaryRoot";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::AsymmetryDetected: return "AsymmetryDetected";
        case ErrorCode::ZeroRowOrColumn: return "ZeroRowOrColumn";
        case ErrorCode::NonPositiveModulus: return "NonPositiveModulus";
        case ErrorCode::NotMonicInteger: return "NotMonicInteger";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::LambdaNotGreaterThanOne: return "LambdaNotGreaterThanOne";
        case ErrorCode::NOutOfRange: return "NOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

}  // namespace bouillabaisse
