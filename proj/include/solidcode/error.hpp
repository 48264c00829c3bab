#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solidcode {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (partition, length function, channel, code file).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownLetter : public Error {
 public:
  UnknownLetter(std::size_t position, const std::string& detail)
      : Error("unknown letter at position " + std::to_string(position) +
              (detail.empty() ? "" : ": " + detail)),
        position_(position) {}

  /// 1-based position in the offending word.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownClass : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The Sardinas-Patterson dangling-suffix set outgrew its budget. Not a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotSolid : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidScalar : public Error {
 public:
  using Error::Error;
};

}  // namespace solidcode
