#include "milnor/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "milnor/error.hpp"

namespace milnor {

namespace {

enum class TokenKind { Number, Imaginary, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  Rational number;      // Number / Imaginary coefficient
  std::string text;     // raw digits, used for exponents
  std::size_t var = 0;  // Variable: 0-based index
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space();
      Token t{TokenKind::End, Rational(0), {}, 0, line_, column_};
      if (pos_ >= text_.size()) {
        tokens.push_back(t);
        return tokens;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        lex_number(t);
      } else if (c == 'z') {
        lex_variable(t);
      } else if (c == 'i') {
        advance();
        t.kind = TokenKind::Imaginary;
        t.number = 1;
      } else {
        switch (c) {
          case '+': t.kind = TokenKind::Plus; break;
          case '-': t.kind = TokenKind::Minus; break;
          case '*': t.kind = TokenKind::Star; break;
          case '/': t.kind = TokenKind::Slash; break;
          case '^': t.kind = TokenKind::Caret; break;
          case '(': t.kind = TokenKind::LParen; break;
          case ')': t.kind = TokenKind::RParen; break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        advance();
      }
      tokens.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string digits() {
    std::string out;
    while (at_digit()) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  void lex_number(Token& t) {
    std::string whole = digits();
    std::string frac;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      advance();
      frac = digits();
    }
    if (whole.empty() && frac.empty()) throw ParseError("malformed number", t.line, t.column);
    BigInt mantissa(whole.empty() ? std::string("0") : whole);
    BigInt scale = 1;
    for (char d : frac) {
      mantissa = mantissa * 10 + (d - '0');
      scale *= 10;
    }
    Rational value(mantissa, scale);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      advance();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        negative = text_[pos_] == '-';
        advance();
      }
      const std::string exp_digits = digits();
      if (exp_digits.empty() || exp_digits.size() > 4) throw ParseError("malformed exponent", line_, column_);
      const int e = std::stoi(exp_digits);
      BigInt ten = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(e));
      value = negative ? value / Rational(ten) : value * Rational(ten);
    }
    t.kind = TokenKind::Number;
    t.number = value;
    t.text = whole;
    // "3i" is an imaginary literal.
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      advance();
      t.kind = TokenKind::Imaginary;
    }
  }

  void lex_variable(Token& t) {
    advance();  // 'z'
    bool braced = false;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      braced = true;
      advance();
    }
    const std::string index = digits();
    if (index.empty() || index.size() > 6) throw ParseError("expected variable index after 'z'", line_, column_);
    if (braced) {
      if (pos_ >= text_.size() || text_[pos_] != '}') throw ParseError("expected '}'", line_, column_);
      advance();
    }
    const long k = std::stol(index);
    if (k < 1) throw ParseError("variable indices start at 1", t.line, t.column);
    t.kind = TokenKind::Variable;
    t.var = static_cast<std::size_t>(k - 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t n_vars) : tokens_(std::move(tokens)), n_(n_vars) {}

  Polynomial parse() {
    Polynomial result = expr();
    if (peek().kind != TokenKind::End) fail("unexpected trailing input");
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const bool minus = take().kind == TokenKind::Minus;
      Polynomial rhs = term();
      if (minus) acc -= rhs;
      else acc += rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
      const Token op = take();
      Polynomial rhs = unary();
      if (op.kind == TokenKind::Star) {
        acc *= rhs;
        continue;
      }
      const bool constant = rhs.is_zero() || (rhs.term_count() == 1 && rhs.terms().begin()->first == Exponent(n_, 0));
      if (!constant) throw ParseError("division is only allowed by constants", op.line, op.column);
      if (rhs.is_zero()) throw ParseError("division by zero", op.line, op.column);
      acc *= GaussianRational(1) / rhs.terms().begin()->second;
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == TokenKind::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == TokenKind::Plus) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != TokenKind::Caret) return base;
    take();
    const Token& e = peek();
    if (e.kind != TokenKind::Number || e.text.empty() || Rational(BigInt(e.text)) != e.number)
      fail("exponent must be a non-negative integer literal");
    if (e.text.size() > 4) fail("exponent too large");
    take();
    return base.pow(static_cast<unsigned>(std::stoul(e.text)));
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        take();
        return Polynomial::constant(n_, GaussianRational(t.number));
      }
      case TokenKind::Imaginary: {
        take();
        return Polynomial::constant(n_, GaussianRational(Rational(0), t.number));
      }
      case TokenKind::Variable: {
        take();
        return Polynomial::variable(n_, t.var);
      }
      case TokenKind::LParen: {
        take();
        Polynomial inner = expr();
        if (peek().kind != TokenKind::RParen) fail("expected ')'");
        take();
        return inner;
      }
      case TokenKind::End: fail("unexpected end of input");
      default: fail("expected a number, 'i', a variable or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t n_;
};

std::size_t max_variable(const std::vector<Token>& tokens) {
  std::size_t n = 0;
  for (const Token& t : tokens)
    if (t.kind == TokenKind::Variable) n = std::max(n, t.var + 1);
  return n;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t min_vars) {
  std::vector<Token> tokens = Lexer(text).run();
  const std::size_t n = std::max<std::size_t>({min_vars, max_variable(tokens), 1});
  return Parser(std::move(tokens), n).parse();
}

std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, std::size_t min_vars) {
  std::size_t n = std::max<std::size_t>(min_vars, 1);
  std::vector<std::vector<Token>> lexed;
  lexed.reserve(texts.size());
  for (const auto& text : texts) {
    lexed.push_back(Lexer(text).run());
    n = std::max(n, max_variable(lexed.back()));
  }
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (auto& tokens : lexed) out.push_back(Parser(std::move(tokens), n).parse());
  return out;
}

GaussianRational parse_constant(std::string_view text) {
  std::vector<Token> tokens = Lexer(text).run();
  if (max_variable(tokens) != 0) throw ParseError("expected a constant, found a variable", 1, 1);
  const Polynomial c = Parser(std::move(tokens), 1).parse();
  return c.constant_term();
}

ComplexVector parse_point(std::string_view text) {
  ComplexVector point;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      point.push_back(parse_constant(piece).to_complex());
    } catch (const ParseError& e) {
      throw ParseError("coordinate " + std::to_string(point.size() + 1) + ": " + e.what(), e.line(),
                       static_cast<int>(start) + e.column());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return point;
}

}  // namespace milnor
