#pragma once

#include <stdexcept>
#include <string>

namespace bip {

enum class ErrorCode {
    ShapeMismatch,
    NonFiniteValue,
    EmptyEnvironment,
    DimensionMismatch,
    SupportTooLarge,
    PriorNotUniform,
    UnknownExample,
    ConfigInvalid,
    IoError,
    NonPositiveVariance,
    TruthOutsideSupport,
    NonFiniteGradient,
    SingularCovariance,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Process exit code used by the CLI (stable contract).
    int exit_code() const noexcept {
        switch (code_) {
            case ErrorCode::ConfigInvalid: return 2;
            case ErrorCode::IoError: return 3;
            case ErrorCode::SupportTooLarge: return 4;
            case ErrorCode::NonFiniteGradient: return 5;
            default: return 1;
        }
    }

  private:
    ErrorCode code_;
};

}  // namespace bip
