#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geosem {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Well-formed input that violates a data invariant (cycles, dangling
/// references, invalid boxes, unknown concepts).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Lookup of an id or name that does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Caller-side contract violation (empty query, empty qualifier set...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace geosem
