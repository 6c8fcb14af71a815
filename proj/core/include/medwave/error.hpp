#pragma once

#include <stdexcept>
#include <string>

namespace medwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on values was violated (bad dimensions, negative sigma, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// File-system or file-format failure.
class IoError : public Error {
 public:
  enum class Code {
    kNotFound,
    kMalformedHeader,
    kUnsupportedMaxval,
    kTruncatedPayload,
    kUnwritable,
  };

  IoError(Code code, const std::string& what) : Error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

}  // namespace medwave
