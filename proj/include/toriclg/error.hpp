#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toriclg {

enum class ErrorKind {
  DegenerateInput,
  NotSimplicial,
  NotInterior,
  NonPrimitiveRay,
  DimMismatch,
  IdentityElement,
  NonSmallGroup,
  InvalidParameters,
  IncompleteSpec,
  UnsupportedKind,
  ParseError,
  UnknownParam,
  InvalidMatrix,
  UnboundedSlice,
  NegativePairing,
  InvalidFixture,
  LoadError,
  Overflow,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::IdentityElement: return "IdentityElement";
    case ErrorKind::NonSmallGroup: return "NonSmallGroup";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::IncompleteSpec: return "IncompleteSpec";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownParam: return "UnknownParam";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::UnboundedSlice: return "UnboundedSlice";
    case ErrorKind::NegativePairing: return "NegativePairing";
    case ErrorKind::InvalidFixture: return "InvalidFixture";
    case ErrorKind::LoadError: return "LoadError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace toriclg
