#pragma once

#include <stdexcept>
#include <string>

namespace otinv {

// Exit-code map used by the CLI: 1 config, 2 io, 3 numeric, 4 non-convergence.
enum class ErrorClass : int {
    Config = 1,
    Io = 2,
    Numeric = 3,
    NonConvergence = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }
    int exit_code() const noexcept { return static_cast<int>(cls_); }

private:
    ErrorClass cls_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorClass::Config, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorClass::Io, what) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(ErrorClass::Numeric, what) {}
};

class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& what) : Error(ErrorClass::NonConvergence, what) {}
};

// Narrow subtypes so callers can catch specific failure modes.
struct ShapeMismatch : NumericError {
    using NumericError::NumericError;
};
struct NumericUnderflow : NumericError {
    using NumericError::NumericError;
};
struct NonFiniteGradient : NumericError {
    using NumericError::NumericError;
};
struct DegenerateRow : NumericError {
    using NumericError::NumericError;
};
struct DegenerateVariance : NumericError {
    using NumericError::NumericError;
};
struct EmptyComparison : NumericError {
    using NumericError::NumericError;
};
struct AlignmentMismatch : NumericError {
    using NumericError::NumericError;
};
struct InsufficientSamples : NumericError {
    using NumericError::NumericError;
};
struct RankDeficient : NumericError {
    using NumericError::NumericError;
};
struct Separation : NumericError {
    using NumericError::NumericError;
};
struct ZeroTotalOutput : NumericError {
    using NumericError::NumericError;
};
struct MissingCovariate : NumericError {
    using NumericError::NumericError;
};
struct EmptyPanel : NumericError {
    using NumericError::NumericError;
};
struct SchemaMismatch : IoError {
    using IoError::IoError;
};
struct IoFailure : IoError {
    using IoError::IoError;
};
struct MissingInput : IoError {
    using IoError::IoError;
};
struct InconsistentUnits : IoError {
    using IoError::IoError;
};

}  // namespace otinv
