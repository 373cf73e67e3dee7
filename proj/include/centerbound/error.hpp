#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace centerbound {

enum class ErrorCode {
  DegreeMismatch,
  CapExceeded,
  NotSubgroup,
  NotNormal,
  NotAbelian,
  NotPGroup,
  NotCoprime,
  NotGenerating,
  NotInDerived,
  BadAnchors,
  BadFamily,
  ParseError,
  DegreeViolation,
  UnknownFamily,
  ArgOutOfRange,
  CrossCheckFailed,
  BadConfig,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotInDerived: return "NotInDerived";
    case ErrorCode::BadAnchors: return "BadAnchors";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ArgOutOfRange: return "ArgOutOfRange";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The text without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// Thrown whenever an exhaustive method would exceed a configured limit.
// `value` is the size that was requested (decimal, may exceed 64 bits).
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::string value, std::uint64_t limit)
      : Error(ErrorCode::CapExceeded,
              cap_name + " exceeded: " + value + " > " + std::to_string(limit)),
        cap_name_(std::move(cap_name)),
        value_(std::move(value)),
        limit_(limit) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  const std::string& value() const noexcept { return value_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string cap_name_;
  std::string value_;
  std::uint64_t limit_;
};

}  // namespace centerbound
