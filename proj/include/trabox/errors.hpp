#pragma once

#include <stdexcept>

namespace trabox {

/// Raised when an iterative routine fails to converge or a factorization
/// breaks down (maps to exit code 3 at the CLI boundary).
class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for invalid run configurations (maps to exit code 2 at the CLI).
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trabox
