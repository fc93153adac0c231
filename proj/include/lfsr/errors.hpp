#pragma once

#include <stdexcept>
#include <string>

namespace lfsr {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected input data (non-finite samples, out-of-range values).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Image / light field extents that do not satisfy an operation's contract.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Tensor shape mismatches.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Out-of-range view / slice indices.
class IndexError : public Error {
public:
    using Error::Error;
};

// Bad scalar arguments (e.g. non-positive gamma).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Violated API contracts (backward on a non-scalar, U != V reports, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

// Missing or mismatched checkpoints and run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Training reached a non-finite loss.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// File system and container format problems.
class IoError : public Error {
public:
    using Error::Error;
};

// Distinct load failures for the light field container.
class MissingViewError : public IoError {
public:
    using IoError::IoError;
};

class InconsistentDimsError : public IoError {
public:
    using IoError::IoError;
};

class MalformedMetaError : public IoError {
public:
    using IoError::IoError;
};

} // namespace lfsr
