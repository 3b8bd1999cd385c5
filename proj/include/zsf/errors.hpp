#pragma once

#include <stdexcept>
#include <string>

namespace zsf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad argument values (wrong length, out-of-range coordinate, bad config).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Requested construction does not exist for the given modulus.
class UnsupportedConstruction : public Error {
public:
    using Error::Error;
};

/// An operation refused to run because the instance exceeds its size guard.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// Internal invariant broken, e.g. a "free" set larger than the proven bound.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// Filesystem / stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// Base for set-file loading failures. Each concrete kind is distinct so
/// callers and tests can tell them apart.
class LoadError : public Error {
public:
    using Error::Error;
};

class JsonParseError : public LoadError {
public:
    using LoadError::LoadError;
};

/// Missing/ill-typed field, unsupported format version, wrong vector length.
class SchemaError : public LoadError {
public:
    using LoadError::LoadError;
};

/// Declared size does not match the number of vectors.
class SizeMismatchError : public LoadError {
public:
    using LoadError::LoadError;
};

/// A coordinate falls outside [0, m).
class CoordinateRangeError : public LoadError {
public:
    using LoadError::LoadError;
};

/// The same vector appears twice.
class DuplicateVectorError : public LoadError {
public:
    using LoadError::LoadError;
};

} // namespace zsf
