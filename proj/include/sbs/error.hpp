#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbs {

enum class ErrorKind {
  InvalidParameter,
  InvalidArgument,
  MalformedMatrix,
  UnsupportedRegime,
  InvalidStep,
  Overflow,
  IllConditioned,
  InvalidState,
  NoClosedForm,
  Io,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the moment integrator when a state entry stops being finite.
class OverflowError : public Error {
 public:
  OverflowError(std::size_t step, const std::string& what)
      : Error(ErrorKind::Overflow, what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace sbs
