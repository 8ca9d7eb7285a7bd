#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pathset {

// Machine-readable error codes surfaced by the CLI as {"error": code, ...}.
enum class ErrorCode {
    StructuralError,
    Precondition,
    NotPIntegral,
    NotCoprime,
    PMismatch,
    EmptySet,
    NotSingleton,
    EnumerationTooLarge,
    NumericalFailure,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. Internal invariant
/// violations use std::logic_error instead and indicate a bug.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(std::move(detail)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace pathset
