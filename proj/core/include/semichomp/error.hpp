#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semichomp {

using Int = std::int64_t;

enum class ErrorKind {
  kInvalidInput,
  kInvalidArgument,
  kInvalidPosition,
  kIllegalMove,
  kValidation,
  kTableTooLarge,
  kOutOfWindow,
  kOverflow,
  kMemoOverflow,
  kBudgetExhausted,
  kNoStrategy,
  kUndefinedBound,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports is an Error carrying its kind, so callers
// (the CLI maps kinds to exit codes, the service to HTTP statuses) can branch
// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::kOverflow, "integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::kOverflow, "integer overflow in multiplication");
  return r;
}

}  // namespace semichomp
