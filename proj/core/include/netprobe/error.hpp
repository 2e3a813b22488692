#pragma once

#include <stdexcept>
#include <string>

namespace netprobe {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied parameter is outside the operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A rejection sampler exhausted its resample budget.
class RejectionLimit : public Error {
public:
    using Error::Error;
};

// Spectrum data cannot come from a simple connected graph within tolerance
// (typically: probe noise too large).
class InconsistentSpectrum : public Error {
public:
    using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

// The probe + network potential matrix is not positive definite.
class UnstableCoupling : public Error {
public:
    using Error::Error;
};

}  // namespace netprobe
