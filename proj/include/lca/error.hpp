#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lca {

enum class ErrorKind {
  DeltaNotInvertible,
  NotAutomorphism,
  NotSquareZero,
  TagMismatch,
  DomainMismatch,
  ContainsRealBlock,
  ShapeMismatch,
  CapExceeded,
  SyntaxError,
  ValueError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Typed failure raised by every library operation.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised by the group-expression and document parsers. `offset` is the
/// byte position in the input text where parsing stopped.
class ParseError : public Error {
public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string &what)
      : Error(kind, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

} // namespace lca
