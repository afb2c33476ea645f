#pragma once

#include <stdexcept>

namespace srzf {

// Malformed inputs: dimension mismatches, empty vectors, bad sweep specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-domain numeric parameters: lambda <= 0, sigma2 <= 0, negative loads.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// File I/O failures; message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srzf
