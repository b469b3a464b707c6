#ifndef TENCOMPL_ERRORS_HPP
#define TENCOMPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tencompl {

/// Bad flags, bad config values, contradictory options. CLI exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data or violated data invariants. CLI exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite values or failed numerics. CLI exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tencompl

#endif
