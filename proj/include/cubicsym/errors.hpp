#ifndef CUBICSYM_ERRORS_HPP
#define CUBICSYM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubicsym {

/// Malformed input text (polynomial expressions, corpus records).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}

  /// Byte offset into the input at which the error was detected.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A precondition of an operation was violated by the caller
/// (wrong degree, size mismatch, zero input where nonzero is required, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(std::string message)
      : std::runtime_error(std::move(message)) {}
};

/// A runtime self-check failed. This always indicates a bug upstream,
/// never bad user input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(std::string message)
      : std::logic_error(std::move(message)) {}
};

} // namespace cubicsym

#endif
