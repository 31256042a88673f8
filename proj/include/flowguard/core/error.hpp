#pragma once

#include <stdexcept>
#include <string>

namespace flowguard {

// Base for every error raised by the library. Callers that only care about
// "the pipeline could not proceed" catch this one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed schema, header mismatch, unknown column.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Input data violates a precondition (empty set, missing class, shape mismatch).
class DataError : public Error {
public:
    using Error::Error;
};

// Invalid hyperparameter or configuration value.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Artifact container could not be read (bad magic, version, checksum).
class FormatError : public Error {
public:
    using Error::Error;
};

// A state transition that is not allowed (review decisions, finalize).
class ConflictError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace flowguard
