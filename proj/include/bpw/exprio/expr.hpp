#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bpw/error.hpp"
#include "bpw/exact.hpp"

namespace bpw {

enum class ExprKind { Vacuum, Hwv, Lattice, Ident, Mode, NProd, NOp, Deriv, Scale, Sum, Let };

/// Source position of a node, 1-based; ignored by equality.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Expression tree of the state DSL.
struct Expr {
  ExprKind kind = ExprKind::Vacuum;
  std::string factor;  // Mode
  std::string name;    // Mode generator, Ident, Let binder
  Rational index;      // Mode index, NProd n, Lattice charge
  Scalar x;            // Hwv x, Scale factor
  Scalar y;            // Hwv y
  std::vector<Expr> args;
  SourcePos pos;

  static Expr vacuum() { return {}; }
  static Expr hwv(Scalar x, Scalar y) {
    Expr e;
    e.kind = ExprKind::Hwv;
    e.x = std::move(x);
    e.y = std::move(y);
    return e;
  }
  static Expr lattice(long q) {
    Expr e;
    e.kind = ExprKind::Lattice;
    e.index = Rational(q);
    return e;
  }
  static Expr ident(std::string n) {
    Expr e;
    e.kind = ExprKind::Ident;
    e.name = std::move(n);
    return e;
  }
  static Expr mode(std::string factor, std::string gen, Rational index, Expr child) {
    Expr e;
    e.kind = ExprKind::Mode;
    e.factor = std::move(factor);
    e.name = std::move(gen);
    e.index = std::move(index);
    e.args.push_back(std::move(child));
    return e;
  }
  static Expr nprod(long n, Expr a, Expr b) {
    Expr e;
    e.kind = ExprKind::NProd;
    e.index = Rational(n);
    e.args = {std::move(a), std::move(b)};
    return e;
  }
  static Expr nop(Expr a, Expr b) {
    Expr e;
    e.kind = ExprKind::NOp;
    e.args = {std::move(a), std::move(b)};
    return e;
  }
  static Expr deriv(Expr a) {
    Expr e;
    e.kind = ExprKind::Deriv;
    e.args.push_back(std::move(a));
    return e;
  }
  static Expr scale(Scalar c, Expr a) {
    Expr e;
    e.kind = ExprKind::Scale;
    e.x = std::move(c);
    e.args.push_back(std::move(a));
    return e;
  }
  static Expr sum(std::vector<Expr> terms) {
    Expr e;
    e.kind = ExprKind::Sum;
    e.args = std::move(terms);
    return e;
  }
  static Expr let(std::string n, Expr value, Expr body) {
    Expr e;
    e.kind = ExprKind::Let;
    e.name = std::move(n);
    e.args = {std::move(value), std::move(body)};
    return e;
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.factor == b.factor && a.name == b.name && a.index == b.index && a.x == b.x &&
           a.y == b.y && a.args == b.args;
  }
};

namespace detail {

inline bool word_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' && c != '{' && c != '}' &&
         c != ';';
}

inline bool valid_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' || c == '\'' || c == '.'))
      return false;
  return true;
}

inline const char* const kHeads[] = {"mode", "nprod", "nop", "deriv", "scale", "sum", "let"};

}  // namespace detail

/// Recursive-descent parser for the S-expression DSL. Comments run from ';' to end of line.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < text_.size()) fail("trailing input", {"end of input"});
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  int depth_ = 0;

  SourcePos here() const { return {line_, pos_ - line_start_ + 1}; }

  SourcePos at_token() {
    skip();
    return here();
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError(msg, line_, pos_ - line_start_ + 1, std::move(expected));
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input", {std::string(1, c)});
    ++pos_;
  }

  std::string word(const std::vector<std::string>& expected) {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && detail::word_char(text_[pos_])) ++pos_;
    if (pos_ == start) {
      if (pos_ < text_.size() && !std::isprint(static_cast<unsigned char>(text_[pos_]))) fail("invalid byte", expected);
      fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input", expected);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational(const std::vector<std::string>& expected) {
    SourcePos p = at_token();
    std::string w = word(expected);
    try {
      return Rational::parse(w);
    } catch (const Error&) {
      throw ParseError("malformed number '" + w + "'", p.line, p.column, expected);
    }
  }

  long integer(const char* what) {
    SourcePos p = at_token();
    Rational r = rational({what});
    if (!r.is_integer()) throw ParseError(std::string(what) + " must be an integer", p.line, p.column, {what});
    try {
      return r.to_long();
    } catch (const Error&) {
      throw ParseError(std::string(what) + " " + r.str() + " is out of range", p.line, p.column, {what});
    }
  }

  /// rat or {scalar}.
  Scalar scalar() {
    skip();
    if (!peek('{')) return Scalar(rational({"number", "{scalar}"}));
    SourcePos p = here();
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '}') {
      if (text_[pos_] == '\n') fail("unterminated scalar literal", {"}"});
      ++pos_;
    }
    if (pos_ == text_.size()) fail("unterminated scalar literal", {"}"});
    std::string_view body = text_.substr(start, pos_ - start);
    ++pos_;
    try {
      return ScalarParser(body, p.line, p.column).parse();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), p.line, p.column, {"scalar"});
    }
  }

  Expr expr() {
    skip();
    SourcePos p = here();
    if (pos_ >= text_.size()) fail("unexpected end of input", {"(", "vac", "hwv", "latt", "identifier"});
    if (text_[pos_] == '(') {
      if (++depth_ > 256) fail("expression nested too deeply");
      ++pos_;
      Expr e = list();
      e.pos = p;
      expect(')');
      --depth_;
      return e;
    }
    std::string w = word({"(", "vac", "hwv", "latt", "identifier"});
    Expr e;
    if (w == "vac") {
      e = Expr::vacuum();
    } else if (w == "hwv") {
      expect('(');
      Scalar x = scalar();
      expect(',');
      Scalar y = scalar();
      expect(')');
      e = Expr::hwv(x, y);
    } else if (w == "latt") {
      expect('(');
      long q = integer("integer");
      expect(')');
      e = Expr::lattice(q);
    } else if (detail::valid_ident(w)) {
      e = Expr::ident(w);
    } else {
      throw ParseError("invalid atom '" + w + "'", p.line, p.column, {"(", "vac", "hwv", "latt", "identifier"});
    }
    e.pos = p;
    return e;
  }

  Expr list() {
    SourcePos hp = at_token();
    std::vector<std::string> heads(std::begin(detail::kHeads), std::end(detail::kHeads));
    std::string head = word(heads);
    if (head == "mode") {
      SourcePos gp = at_token();
      std::string fg = word({"factor.generator"});
      auto dot = fg.find('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 == fg.size())
        throw ParseError("mode needs factor.generator, got '" + fg + "'", gp.line, gp.column, {"factor.generator"});
      SourcePos ip = at_token();
      Rational n = rational({"index"});
      if (!(Rational(2) * n).is_integer())
        throw ParseError("index parity: mode index " + n.str() + " is neither an integer nor a half-integer", ip.line,
                         ip.column, {"integer", "half-integer"});
      Expr e = Expr::mode(fg.substr(0, dot), fg.substr(dot + 1), n, expr());
      return e;
    }
    if (head == "nprod") {
      long n = integer("integer");
      Expr a = expr();
      return Expr::nprod(n, std::move(a), expr());
    }
    if (head == "nop") {
      Expr a = expr();
      return Expr::nop(std::move(a), expr());
    }
    if (head == "deriv") return Expr::deriv(expr());
    if (head == "scale") {
      Scalar c = scalar();
      return Expr::scale(std::move(c), expr());
    }
    if (head == "sum") {
      std::vector<Expr> terms;
      while (!peek(')')) {
        if (pos_ >= text_.size()) fail("unexpected end of input", {")"});
        terms.push_back(expr());
      }
      return Expr::sum(std::move(terms));
    }
    if (head == "let") {
      SourcePos np = at_token();
      std::string n = word({"identifier"});
      if (!detail::valid_ident(n) || n == "vac" || n == "hwv" || n == "latt")
        throw ParseError("invalid binder '" + n + "'", np.line, np.column, {"identifier"});
      Expr v = expr();
      return Expr::let(n, std::move(v), expr());
    }
    throw ParseError("unknown head '" + head + "'", hp.line, hp.column, heads);
  }
};

inline Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

namespace detail {

inline std::string scalar_literal(const Scalar& s) {
  if (s.is_rational()) return s.rational().str();
  return "{" + s.str() + "}";
}

}  // namespace detail

/// Canonical single-line form; parse_expr(print_expr(e)) == e.
inline std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Vacuum: return "vac";
    case ExprKind::Hwv: return "hwv(" + detail::scalar_literal(e.x) + "," + detail::scalar_literal(e.y) + ")";
    case ExprKind::Lattice: return "latt(" + e.index.str() + ")";
    case ExprKind::Ident: return e.name;
    case ExprKind::Mode:
      return "(mode " + e.factor + "." + e.name + " " + e.index.str() + " " + print_expr(e.args[0]) + ")";
    case ExprKind::NProd:
      return "(nprod " + e.index.str() + " " + print_expr(e.args[0]) + " " + print_expr(e.args[1]) + ")";
    case ExprKind::NOp: return "(nop " + print_expr(e.args[0]) + " " + print_expr(e.args[1]) + ")";
    case ExprKind::Deriv: return "(deriv " + print_expr(e.args[0]) + ")";
    case ExprKind::Scale: return "(scale " + detail::scalar_literal(e.x) + " " + print_expr(e.args[0]) + ")";
    case ExprKind::Sum: {
      std::string s = "(sum";
      for (const auto& a : e.args) s += " " + print_expr(a);
      return s + ")";
    }
    case ExprKind::Let:
      return "(let " + e.name + " " + print_expr(e.args[0]) + " " + print_expr(e.args[1]) + ")";
  }
  return "";
}

}  // namespace bpw
