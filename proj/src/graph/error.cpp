#include "orthodb/error.hpp"

namespace orthodb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::MultipleCycles: return "MultipleCycles";
    case ErrorCode::InsufficientDegree: return "InsufficientDegree";
    case ErrorCode::TooManyForbidden: return "TooManyForbidden";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

}  // namespace orthodb
