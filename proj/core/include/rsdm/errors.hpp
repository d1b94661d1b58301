#pragma once

#include <stdexcept>
#include <string>

namespace rsdm {

/// Inconsistent sizes or out-of-domain configuration values.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite or otherwise malformed numeric input.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The objective produced a value that cannot be ranked (NaN).
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad command line or bad request to the experiment harness.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace rsdm
