#pragma once

#include <stdexcept>
#include <string>

namespace affyh {

enum class ErrorKind {
  DivisionByZero,
  MixedRoot,
  SizeMismatch,
  IndexOutOfRange,
  ContextMismatch,
  UnboundSymbol,
  UnknownSymbol,
  UnknownName,
  ParseError,
  NotInBlock,
  EntryOutsideSubalgebra,
  ShapeMismatch,
  InvalidComposition,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// All kernel failures surface as this type; `kind()` is machine-readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace affyh
