#pragma once

#include <stdexcept>
#include <string>

namespace sidonpow {

/// Invalid argument or violated precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value or intermediate sum does not fit the 64-bit working width.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The requested computation exceeds a configured size budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A least-squares fit had too few usable points.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sidonpow
