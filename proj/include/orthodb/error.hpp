#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthodb {

enum class ErrorCode {
  InvalidArgument,
  DegreeMismatch,
  NotConnected,
  MultipleCycles,
  InsufficientDegree,
  TooManyForbidden,
  SearchExhausted,
  ParameterOutOfRange,
  NotCoprime,
  NotPrimePower,
  UnsupportedCase,
  Disconnected,
  IndexOutOfRange,
  GuardExceeded,
  CertificationFailed,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `details` carries the offending
/// vertex ids (DegreeMismatch), the cycle count (MultipleCycles) or the guard
/// value (GuardExceeded).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> details = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> details_;
};

}  // namespace orthodb
