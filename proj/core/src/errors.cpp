#include "pathset/errors.hpp"

namespace pathset {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::StructuralError: return "StructuralError";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::NotPIntegral: return "NotPIntegral";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::PMismatch: return "PMismatch";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotSingleton: return "NotSingleton";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
    }
    return "Unknown";
}

}  // namespace pathset
