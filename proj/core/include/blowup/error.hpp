#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

enum class ErrorKind {
  AmbientMismatch,
  UnknownVariable,
  TruncationOverflow,
  NotInvertible,
  NoMaximalContact,
  InfiniteOrder,
  InadmissibleCenter,
  CapExceeded,
  Precondition,
  NonCoordinateCenter,
  NoRationalWitness,
  Unsupported,
  Parse,
  Budget,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse, format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace blowup
