#include "apolar/parse.hpp"

#include <cctype>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

struct Token {
  enum Kind { Number, Var, Plus, Minus, Star, Slash, Caret, LBracket,
              RBracket, LParen, RParen, End } kind;
  std::string text;  // number digits or variable index digits
  int line, col;
};

class Lexer {
 public:
  Lexer(const std::string& src, const char* var_prefix)
      : src_(src), var_prefix_(var_prefix) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, "", line, col};
    char c = src_[pos_];
    auto one = [&](Token::Kind k) {
      advance();
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '+': return one(Token::Plus);
      case '-': return one(Token::Minus);
      case '*': return one(Token::Star);
      case '/': return one(Token::Slash);
      case '^': return one(Token::Caret);
      case '[': return one(Token::LBracket);
      case ']': return one(Token::RBracket);
      case '(': return one(Token::LParen);
      case ')': return one(Token::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_];
        advance();
      }
      return {Token::Number, digits, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        name += src_[pos_];
        advance();
      }
      if (name != var_prefix_)
        throw ParseError("unknown symbol '" + name + "' (variables are " +
                             var_prefix_ + "1, " + var_prefix_ + "2, ...)",
                         line, col);
      std::string digits;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_];
        advance();
      }
      if (digits.empty())
        throw ParseError("variable needs an index, e.g. " +
                             std::string(var_prefix_) + "1",
                         line, col);
      return {Token::Var, digits, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  const char* var_prefix_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// Recursive descent over either polynomial type; Policy supplies the
// variable prefix, the exponent syntax and the monomial constructor.
template <class P, bool Divided>
class Parser {
 public:
  Parser(const std::string& src, int n, const FieldSpec& field)
      : lex_(src, Divided ? "x" : "dx"), n_(n), field_(field) {
    advance();
  }

  P parse() {
    P out = expr();
    expect(Token::End, "end of input");
    return out;
  }

 private:
  void advance() { cur_ = lex_.next(); }
  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k)
      throw ParseError(std::string("expected ") + what, cur_.line, cur_.col);
    if (k != Token::End) advance();
  }

  P expr() {
    bool neg = false;
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      if (cur_.kind == Token::Minus) neg = !neg;
      advance();
    }
    P acc = term();
    if (neg) acc = -acc;
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      bool minus = cur_.kind == Token::Minus;
      advance();
      P t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  P term() {
    P acc = factor();
    while (cur_.kind == Token::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  P factor() {
    switch (cur_.kind) {
      case Token::Number: {
        Token num = cur_;
        advance();
        std::string text = num.text;
        if (cur_.kind == Token::Slash) {
          advance();
          Token den = cur_;
          expect(Token::Number, "denominator");
          if (mpz_class(den.text) == 0)
            throw ParseError("zero denominator", den.line, den.col);
          text += "/" + den.text;
        }
        mpq_class q(text);
        q.canonicalize();
        return constant(q, num);
      }
      case Token::Var:
        return variable_power();
      case Token::LParen: {
        advance();
        P inner = expr();
        expect(Token::RParen, "')'");
        return inner;
      }
      case Token::Minus: {
        advance();
        return -factor();
      }
      default:
        throw ParseError("expected a number, variable or '('", cur_.line,
                         cur_.col);
    }
  }

  P constant(mpq_class q, const Token& at) {
    try {
      return P::constant(n_, field_, Scalar(field_, q));
    } catch (const Error& e) {
      throw ParseError(e.what(), at.line, at.col);
    }
  }

  P variable_power() {
    Token var = cur_;
    advance();
    int idx = std::stoi(var.text);
    if (idx < 1 || idx > n_)
      throw ParseError("unknown variable index " + var.text + " (have " +
                           std::to_string(n_) + " variables)",
                       var.line, var.col);
    int exp = 1;
    if (cur_.kind == Token::Caret) {
      advance();
      if constexpr (Divided) {
        if (cur_.kind != Token::LBracket)
          throw ParseError(
              "divided powers are written x" + var.text +
                  "^[k]; use ^[2] instead of ^2",
              cur_.line, cur_.col);
        advance();
        Token e = cur_;
        expect(Token::Number, "exponent");
        expect(Token::RBracket, "']'");
        exp = std::stoi(e.text);
      } else {
        if (cur_.kind == Token::LBracket)
          throw ParseError(
              "operators use ordinary powers: write dx" + var.text + "^k",
              cur_.line, cur_.col);
        Token e = cur_;
        expect(Token::Number, "exponent");
        exp = std::stoi(e.text);
      }
    }
    P out(n_, field_);
    out.add_term(Monomial::power(n_, idx - 1, exp), Scalar::one(field_));
    return out;
  }

  Lexer lex_;
  Token cur_;
  int n_;
  FieldSpec field_;
};

}  // namespace

DpPoly parse_poly(const std::string& text, int n, const FieldSpec& field) {
  return Parser<DpPoly, true>(text, n, field).parse();
}

Operator parse_operator(const std::string& text, int n, const FieldSpec& field) {
  return Parser<Operator, false>(text, n, field).parse();
}

}  // namespace apolar
