#pragma once

#include <stdexcept>
#include <string>

namespace kdv5 {

// Error taxonomy shared by the whole library. Each type maps 1:1 onto a
// kdv5_status code at the C boundary.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad argument or violated type invariant (grid sizes, sample counts, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Real exponent of a weighted multiplier exceeds the overflow guard;
/// the caller is probing the growing regime of w / w-tilde.
class OverflowGuard : public Error {
public:
    using Error::Error;
};

/// Requested spectral band reaches past the dealiased part of the spectrum.
class BandTooHigh : public Error {
public:
    using Error::Error;
};

/// Numerical blow-up of the time integration (norm growth beyond guard).
class Instability : public Error {
public:
    using Error::Error;
};

/// Picard iteration failed to contract for three consecutive iterates.
class NoContraction : public Error {
public:
    using Error::Error;
};

/// Refinement levels of a quadrature disagree beyond tolerance.
class QuadratureNonConvergence : public Error {
public:
    using Error::Error;
};

/// Exponent preconditions of a lemma probe or kernel evaluation violated.
class ParameterViolation : public Error {
public:
    using Error::Error;
};

/// Invalid experiment configuration (unknown key, wrong type, missing field).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure while emitting reports.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace kdv5
