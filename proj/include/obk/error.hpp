#pragma once

#include <stdexcept>
#include <string>

namespace obk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor was called with parameters outside its domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (tuple files, caches, certificates).
class FormatError : public Error {
 public:
  FormatError(std::string source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }

 private:
  std::string source_;
  int line_;
};

/// A search ran out of budget before producing a result.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own post-condition check. Always a bug
/// in either the data or the code; never silently recoverable.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace obk
