#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hurwitz/error.hpp"
#include "hurwitz/linalg.hpp"

namespace hurwitz {

/// A parse failure with its 1-based position in the input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& msg)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + msg),
        line_(line),
        column_(column) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

struct FieldDecl {
  QPoly minpoly;
  Interval root;
  std::string symbol;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

/// field / dim / matrix, as read from a problem file.
struct ProblemFile {
  /// Empty for `field rational`.
  std::optional<FieldDecl> field_decl;
  NumberField field;
  std::size_t dim = 0;
  Matrix matrix;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

/// Grammar, one statement per line, `#` to end of line is a comment:
///   field rational | field <poly> root (<lo>, <hi>)
///   dim <n>
///   matrix
///   <n rows of n comma-separated expressions>
/// Expressions use rationals p or p/q, the generator letter of the field
/// polynomial, + - * ^ and parentheses; ^ binds tightest, then unary minus,
/// then *, then + and -; ^ is right-associative with a nonnegative integer
/// exponent.
ProblemFile parse_problem(std::string_view text);

/// Text that parse_problem reads back to an equal ProblemFile.
std::string serialize(const ProblemFile& p);

/// Parses a single expression in `field`; symbol as in the field.
FieldElement parse_element(std::string_view text, const NumberField& field);

/// Symmetric positive definite Cartan matrix over Q[x]/(x^4 + 2x^3 + x^2 - 2)
/// whose Coxeter element has order 8 while the group is infinite.
extern const char* const kCounterexample;

}  // namespace hurwitz
