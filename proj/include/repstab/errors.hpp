#pragma once

#include <stdexcept>
#include <string>

namespace repstab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed or mismatched arguments: size/arity mismatches, invalid
/// partitions, maps that do not compose, sizes below a stable range.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

/// An enumeration would exceed its configured coordinate bound.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "cutoff"; }
};

/// An exact linear system was inconsistent, underdetermined, or a solution
/// failed its verification. Always an implementation bug; never approximated.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "inconsistent"; }
};

}  // namespace repstab
