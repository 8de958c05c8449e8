#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weil {

// Absolute thresholds shared across the library.  A coefficient with
// magnitude <= tau_nil counts as zero when deciding nilpotency; a real part
// with magnitude <= tau_inv counts as non-invertible.
inline constexpr double kTauNil = 1e-12;
inline constexpr double kTauInv = 1e-12;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text.  Carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Invalid configuration or input file (bad JSON/TOML, invalid kappa, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Structural mismatch: arities, element orders, tensor shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A numerical operation left its domain (log of a non-positive number,
/// reciprocal of a non-invertible element, singular metric, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

class NotNilpotentError : public DomainError {
public:
    using DomainError::DomainError;
};

class SingularMetricError : public DomainError {
public:
    using DomainError::DomainError;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace weil
