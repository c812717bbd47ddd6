#include "hurwitz/problem.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace hurwitz {

const char* const kCounterexample =
    "# l^2 + l = sqrt 2\n"
    "field x^4 + 2*x^3 + x^2 - 2 root (79/100, 4/5)\n"
    "dim 3\n"
    "matrix\n"
    "2, -1, -1\n"
    "-1, 2, -x\n"
    "-1, -x, 2\n";

namespace {

constexpr unsigned long kMaxExponent = 4096;

struct Token {
  enum Kind { Number, Ident, Op, End } kind = End;
  std::string text;
  Rational value;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
          throw ParseError(ErrorCode::SyntaxError, line, j + 1, "expected a denominator");
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      Token t{Token::Number, std::string(s.substr(i, j - i)), 0, col};
      const auto slash = t.text.find('/');
      if (slash != std::string::npos &&
          t.text.find_first_not_of('0', slash + 1) == std::string::npos)
        throw ParseError(ErrorCode::DivisionByZero, line, col, "zero denominator");
      if (!parse_rational(t.text, t.value))
        throw ParseError(ErrorCode::SyntaxError, line, col, "bad number '" + t.text + "'");
      out.push_back(std::move(t));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), 0, col});
      i = j;
    } else if (std::string_view("+-*^(),").find(c) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, c), 0, col});
      ++i;
    } else if (c == '/') {
      throw ParseError(ErrorCode::SyntaxError, line, col,
                       "'/' may only appear inside a rational literal");
    } else {
      throw ParseError(ErrorCode::SyntaxError, line, col,
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", 0, s.size() + 1});
  return out;
}

struct Node {
  enum Kind { Num, Sym, Add, Sub, Mul, Neg, Pow } kind;
  Rational value;
  std::string name;
  unsigned long exponent = 0;
  std::size_t column = 0;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t line, std::size_t pos = 0)
      : toks_(toks), line_(line), pos_(pos) {}

  NodePtr expr() {
    NodePtr left = term();
    while (peek_op("+") || peek_op("-")) {
      const Token& op = toks_[pos_++];
      NodePtr right = term();
      left = binary(op.text == "+" ? Node::Add : Node::Sub, std::move(left), std::move(right),
                    op.column);
    }
    return left;
  }

  [[nodiscard]] std::size_t pos() const { return pos_; }
  [[nodiscard]] const Token& current() const { return toks_[pos_]; }

 private:
  NodePtr term() {
    NodePtr left = unary();
    while (peek_op("*")) {
      const std::size_t col = toks_[pos_++].column;
      left = binary(Node::Mul, std::move(left), unary(), col);
    }
    return left;
  }

  NodePtr unary() {
    if (peek_op("-")) {
      const std::size_t col = toks_[pos_++].column;
      auto n = std::make_unique<Node>(Node{Node::Neg, 0, "", 0, col, nullptr, nullptr});
      n->lhs = unary();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!peek_op("^")) return base;
    const std::size_t col = toks_[pos_++].column;
    const unsigned long e = exponent();
    auto n = std::make_unique<Node>(Node{Node::Pow, 0, "", e, col, nullptr, nullptr});
    n->lhs = std::move(base);
    return n;
  }

  // Right-associative chain of integer literals: 2^3^2 = 2^9.
  unsigned long exponent() {
    const Token& t = current();
    if (t.kind != Token::Number || t.text.find('/') != std::string::npos)
      throw ParseError(ErrorCode::SyntaxError, line_, t.column,
                       "exponent must be a nonnegative integer literal");
    ++pos_;
    Integer base = t.value.get_num();
    Integer result = base;
    if (peek_op("^")) {
      ++pos_;
      const unsigned long e = exponent();
      mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
    }
    if (result > kMaxExponent)
      throw ParseError(ErrorCode::SyntaxError, line_, t.column, "exponent too large");
    return result.get_ui();
  }

  NodePtr atom() {
    const Token& t = current();
    if (t.kind == Token::Number) {
      ++pos_;
      return std::make_unique<Node>(Node{Node::Num, t.value, "", 0, t.column, nullptr, nullptr});
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      return std::make_unique<Node>(Node{Node::Sym, 0, t.text, 0, t.column, nullptr, nullptr});
    }
    if (peek_op("(")) {
      ++pos_;
      NodePtr inner = expr();
      if (!peek_op(")"))
        throw ParseError(ErrorCode::SyntaxError, line_, current().column, "expected ')'");
      ++pos_;
      return inner;
    }
    throw ParseError(ErrorCode::SyntaxError, line_, t.column,
                     t.kind == Token::End ? "unexpected end of line"
                                          : "unexpected '" + t.text + "'");
  }

  bool peek_op(const char* op) const {
    return toks_[pos_].kind == Token::Op && toks_[pos_].text == op;
  }

  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, std::size_t col) {
    auto n = std::make_unique<Node>(Node{k, 0, "", 0, col, nullptr, nullptr});
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  const std::vector<Token>& toks_;
  std::size_t line_;
  std::size_t pos_;
};

// Evaluates a tree in any ring with + - * and an element for the symbol.
template <class V, class Lit, class Sym>
V evaluate_node(const Node& n, const Lit& lit, const Sym& sym) {
  switch (n.kind) {
    case Node::Num: return lit(n.value);
    case Node::Sym: return sym(n);
    case Node::Add:
    case Node::Sub:
    case Node::Mul: {
      // Left first, so errors point at the leftmost offender.
      V a = evaluate_node<V>(*n.lhs, lit, sym);
      V b = evaluate_node<V>(*n.rhs, lit, sym);
      if (n.kind == Node::Add) return a + b;
      if (n.kind == Node::Sub) return a - b;
      return a * b;
    }
    case Node::Neg: return lit(Rational(0)) - evaluate_node<V>(*n.lhs, lit, sym);
    case Node::Pow: {
      V base = evaluate_node<V>(*n.lhs, lit, sym);
      V acc = lit(Rational(1));
      for (unsigned long e = n.exponent; e; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
      }
      return acc;
    }
  }
  throw Error(ErrorCode::InternalMismatch, "bad expression node");
}

// Single letters are generator names; anything longer is an error.
void check_symbol_name(const Node& n, std::size_t line) {
  if (n.name.size() != 1)
    throw ParseError(ErrorCode::SyntaxError, line, n.column,
                     "unknown identifier '" + n.name + "'");
}

FieldElement element_from(const Node& n, const NumberField& field,
                          const std::optional<std::string>& symbol, std::size_t line) {
  auto lit = [&](const Rational& q) { return FieldElement(field, q); };
  auto sym = [&](const Node& s) {
    check_symbol_name(s, line);
    if (!symbol)
      throw ParseError(ErrorCode::FieldMismatch, line, s.column,
                       "'" + s.name + "' used over the rational field");
    if (s.name != *symbol)
      throw ParseError(ErrorCode::FieldMismatch, line, s.column,
                       "'" + s.name + "' is not the generator '" + *symbol + "'");
    return FieldElement::generator(field);
  };
  return evaluate_node<FieldElement>(n, lit, sym);
}

QPoly poly_from(const Node& n, std::string& symbol, std::size_t line) {
  auto lit = [](const Rational& q) { return QPoly::constant(q); };
  auto sym = [&](const Node& s) {
    check_symbol_name(s, line);
    if (symbol.empty()) symbol = s.name;
    if (s.name != symbol)
      throw ParseError(ErrorCode::SyntaxError, line, s.column,
                       "polynomial uses both '" + symbol + "' and '" + s.name + "'");
    return QPoly{0, 1};
  };
  return evaluate_node<QPoly>(n, lit, sym);
}

Rational signed_literal(const std::vector<Token>& toks, std::size_t& pos, std::size_t line) {
  bool negative = false;
  if (toks[pos].kind == Token::Op && toks[pos].text == "-") {
    negative = true;
    ++pos;
  }
  if (toks[pos].kind != Token::Number)
    throw ParseError(ErrorCode::SyntaxError, line, toks[pos].column, "expected a rational");
  Rational q = toks[pos++].value;
  return negative ? Rational(-q) : q;
}

void expect_op(const std::vector<Token>& toks, std::size_t& pos, const char* op,
               std::size_t line) {
  if (toks[pos].kind != Token::Op || toks[pos].text != op)
    throw ParseError(ErrorCode::SyntaxError, line, toks[pos].column,
                     std::string("expected '") + op + "'");
  ++pos;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (true) {
    const std::size_t nl = text.find('\n');
    std::string_view l = text.substr(0, nl);
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.find_first_not_of(" \t") != std::string_view::npos) out.push_back({number, l});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++number;
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::optional<FieldDecl> decl;
  std::optional<NumberField> field;
  std::optional<std::size_t> dim;
  std::optional<Matrix> matrix;
  std::size_t rows_read = 0;
  bool in_matrix = false;
  std::size_t last_line = 1;

  for (const auto& [number, line] : split_lines(text)) {
    last_line = number;
    const auto toks = tokenize(line, number);
    if (in_matrix) {
      if (rows_read == *dim)
        throw ParseError(ErrorCode::DimensionMismatch, number, toks[0].column,
                         "more than " + std::to_string(*dim) + " matrix rows");
      std::size_t pos = 0;
      std::size_t col = 0;
      while (true) {
        ExprParser p(toks, number, pos);
        const std::size_t start = toks[pos].column;
        NodePtr n = p.expr();
        pos = p.pos();
        if (col == *dim)
          throw ParseError(ErrorCode::DimensionMismatch, number, start,
                           "row has more than " + std::to_string(*dim) + " entries");
        (*matrix)(rows_read, col++) =
            element_from(*n, *field, decl ? std::optional(decl->symbol) : std::nullopt, number);
        if (toks[pos].kind == Token::End) break;
        expect_op(toks, pos, ",", number);
      }
      if (col != *dim)
        throw ParseError(ErrorCode::DimensionMismatch, number, line.size() + 1,
                         "row has " + std::to_string(col) + " entries, expected " +
                             std::to_string(*dim));
      ++rows_read;
      continue;
    }

    if (toks[0].kind != Token::Ident)
      throw ParseError(ErrorCode::SyntaxError, number, toks[0].column, "expected a keyword");
    const std::string& kw = toks[0].text;
    if (kw == "field") {
      if (field) throw ParseError(ErrorCode::SyntaxError, number, 1, "field declared twice");
      if (toks[1].kind == Token::Ident && toks[1].text == "rational") {
        if (toks[2].kind != Token::End)
          throw ParseError(ErrorCode::SyntaxError, number, toks[2].column,
                           "unexpected '" + toks[2].text + "'");
        field = NumberField::rationals();
        continue;
      }
      ExprParser p(toks, number, 1);
      NodePtr n = p.expr();
      std::size_t pos = p.pos();
      if (toks[pos].kind != Token::Ident || toks[pos].text != "root")
        throw ParseError(ErrorCode::SyntaxError, number, toks[pos].column, "expected 'root'");
      ++pos;
      expect_op(toks, pos, "(", number);
      const Rational lo = signed_literal(toks, pos, number);
      expect_op(toks, pos, ",", number);
      const Rational hi = signed_literal(toks, pos, number);
      expect_op(toks, pos, ")", number);
      if (toks[pos].kind != Token::End)
        throw ParseError(ErrorCode::SyntaxError, number, toks[pos].column,
                         "unexpected '" + toks[pos].text + "'");
      if (!(lo < hi))
        throw ParseError(ErrorCode::SyntaxError, number, toks[1].column,
                         "root interval needs lo < hi");
      std::string symbol;
      QPoly f = poly_from(*n, symbol, number);
      if (symbol.empty()) symbol = "x";
      try {
        field = NumberField::create(f, {lo, hi}, symbol);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.code(), number, toks[1].column, e.what());
      }
      decl = FieldDecl{f, {lo, hi}, symbol};
    } else if (kw == "dim") {
      if (dim) throw ParseError(ErrorCode::SyntaxError, number, 1, "dim declared twice");
      if (toks[1].kind != Token::Number || toks[1].text.find('/') != std::string::npos ||
          toks[2].kind != Token::End)
        throw ParseError(ErrorCode::SyntaxError, number, toks[1].column,
                         "dim takes one positive integer");
      const Integer v = toks[1].value.get_num();
      if (v < 1 || v > 64)
        throw ParseError(ErrorCode::DimensionMismatch, number, toks[1].column,
                         "dim must lie in 1..64");
      dim = v.get_ui();
    } else if (kw == "matrix") {
      if (toks[1].kind != Token::End)
        throw ParseError(ErrorCode::SyntaxError, number, toks[1].column,
                         "rows start on the next line");
      if (!field || !dim)
        throw ParseError(ErrorCode::SyntaxError, number, 1,
                         "matrix must follow the field and dim lines");
      matrix = Matrix(*field, *dim, *dim);
      in_matrix = true;
    } else {
      throw ParseError(ErrorCode::SyntaxError, number, toks[0].column,
                       "unknown keyword '" + kw + "'");
    }
  }
  if (!in_matrix)
    throw ParseError(ErrorCode::SyntaxError, last_line, 1, "missing matrix section");
  if (rows_read != *dim)
    throw ParseError(ErrorCode::DimensionMismatch, last_line, 1,
                     "matrix has " + std::to_string(rows_read) + " rows, expected " +
                         std::to_string(*dim));
  return ProblemFile{decl, *field, *dim, *matrix};
}

FieldElement parse_element(std::string_view text, const NumberField& field) {
  const auto toks = tokenize(text, 1);
  ExprParser p(toks, 1);
  NodePtr n = p.expr();
  if (p.current().kind != Token::End)
    throw ParseError(ErrorCode::SyntaxError, 1, p.current().column,
                     "unexpected '" + p.current().text + "'");
  std::optional<std::string> symbol;
  if (!field.is_rational()) symbol = field.symbol();
  return element_from(*n, field, symbol, 1);
}

std::string serialize(const ProblemFile& p) {
  std::string out = "field ";
  if (p.field_decl)
    out += p.field_decl->minpoly.to_string(p.field_decl->symbol) + " root (" +
           p.field_decl->root.lo.get_str() + ", " + p.field_decl->root.hi.get_str() + ")\n";
  else
    out += "rational\n";
  out += "dim " + std::to_string(p.dim) + "\nmatrix\n";
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) {
      if (j) out += ", ";
      out += p.matrix(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.field_decl == b.field_decl && a.dim == b.dim && a.matrix.key() == b.matrix.key();
}

}  // namespace hurwitz
