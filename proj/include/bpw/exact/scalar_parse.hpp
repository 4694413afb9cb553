#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "bpw/exact/scalar.hpp"

namespace bpw {

/// Infix scalar expressions: + - * / ^, parentheses, integers and parameter
/// identifiers ("k'" is accepted for kp). Errors carry the column.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  Scalar parse() {
    Scalar s = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character", {"+", "-", "*", "/", "^", "end"});
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw ParseError(msg, line_, offset_ + pos_ + 1, std::move(expected));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero", {});
        v /= d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = primary();
    if (eat('^')) {
      skip();
      bool negative = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent", {"integer"});
      if (pos_ - start > 6) fail("exponent too large", {});
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (negative && base.is_zero()) fail("division by zero", {});
      return base.pow(negative ? -e : e);
    }
    return base;
  }
  Scalar primary() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("unbalanced parenthesis", {")"});
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input", {"number", "identifier", "("});
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        name += "'";
      }
      return Scalar::variable(name);
    }
    fail("unexpected character", {"number", "identifier", "("});
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

inline Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

/// Strict "p" or "p/q" literal, as used for levels on the command line.
inline Rational parse_rational(std::string_view text) { return Rational::parse(text); }

}  // namespace bpw
