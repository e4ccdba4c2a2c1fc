#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wct {

enum class ErrorCode {
  DegenerateSimplex,
  DegenerateTet,
  IndexOutOfRange,
  DuplicateTet,
  DuplicatePoint,
  NotConforming,
  AllCoplanar,
  TooFewPoints,
  InvalidArgument,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the mesh readers; line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& msg)
      : Error(ErrorCode::ParseError,
              file + ":" + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wct
