#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ifcrack {

enum class ErrorKind {
  Domain,
  NonConvergence,
  NonFiniteSample,
  TailBoundExceeded,
  Pole,
  Geometry,
  SelfBalance,
  UnsupportedLoad,
  DivisionByZero,
  Config,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets callers (the CLI in
/// particular) separate configuration problems from numerical ones.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace ifcrack
