#pragma once

#include <stdexcept>
#include <string>

namespace slidetex {

/// Base error for all failures raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or usage (bad parameters, inconsistent options).
/// The CLI maps this to exit code 1.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Bad or missing input data (unreadable files, malformed manifests,
/// corrupt models, dimension mismatches). The CLI maps this to exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace slidetex
