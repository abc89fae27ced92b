#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

enum class ErrorKind {
  kInvalidInput,  // malformed text, unknown scheme, bad flag value
  kPrecondition,  // well-formed input that violates an operation's contract
  kBudget,        // an enumeration would exceed its configured budget
  kExhausted,     // a finite sequence was read past its end
  kIo,            // unreadable or unwritable path
  kInternal,      // a proven invariant failed: implementation bug
};

const char* error_kind_name(ErrorKind kind) noexcept;

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

}  // namespace sidon
