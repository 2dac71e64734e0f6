#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wilf {

enum class ErrorKind {
  EmptyInput,
  NotCofinite,
  NotAMember,
  NaturalsHasNoType,
  NaturalsUnsupported,
  NotAGap,
  NotCoprime,
  NotTwoGenerated,
  NoSuchSemimodule,
  InvalidArgument,
  ParseError,
  Overflow,
  ResourceLimit,
  InternalInconsistency,
};

constexpr std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotCofinite: return "NotCofinite";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NaturalsHasNoType: return "NaturalsHasNoType";
    case ErrorKind::NaturalsUnsupported: return "NaturalsUnsupported";
    case ErrorKind::NotAGap: return "NotAGap";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotTwoGenerated: return "NotTwoGenerated";
    case ErrorKind::NoSuchSemimodule: return "NoSuchSemimodule";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is stable and is what the
/// CLI prints; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Raised when two independent evaluations of a proven identity disagree.
[[noreturn]] inline void inconsistency(const std::string& message) {
  throw Error(ErrorKind::InternalInconsistency, message);
}

}  // namespace wilf
