#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorCode {
  NonMonic,
  NotIrreducible,
  NoRootInInterval,
  MultipleRootsInInterval,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  NotSquare,
  Singular,
  NotSymmetric,
  BadDiagonal,
  NotAReflection,
  IndexOutOfRange,
  BadSubsequence,
  SyntaxError,
  InternalMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps InternalMismatch to exit code 3 and everything else to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hurwitz
