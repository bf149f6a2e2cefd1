#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hwm {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  NotHankel,
  NotSymmetric,
  NotSymmetricSet,
  ExponentOutOfRange,
  SizeLimitExceeded,
  UnknownFamily,
  OrderTooSmall,
  NumericalFailure,
  NotSelfInverse,
  NotBipartite,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotHankel: return "NotHankel";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSymmetricSet: return "NotSymmetricSet";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NotSelfInverse: return "NotSelfInverse";
    case ErrorKind::NotBipartite: return "NotBipartite";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hwm
