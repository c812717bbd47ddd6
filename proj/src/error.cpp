#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoRootInInterval: return "NoRootInInterval";
    case ErrorCode::MultipleRootsInInterval: return "MultipleRootsInInterval";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::NotAReflection: return "NotAReflection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadSubsequence: return "BadSubsequence";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

}  // namespace hurwitz
