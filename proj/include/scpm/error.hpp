// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_ERROR_HPP
#define SCPM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scpm {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (files, records, node sets).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters: thresholds, core specs incompatible with the stream.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed to hold. Indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace scpm

#endif  // SCPM_ERROR_HPP
