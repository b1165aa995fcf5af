#include "expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace qpentagon::cli {

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Var>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Param>) {
          return true;
        } else if constexpr (std::is_same_v<T, Const>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && *lhs.lhs == *rhs.lhs && *lhs.rhs == *rhs.rhs;
        } else if constexpr (std::is_same_v<T, Pow>) {
          return lhs.exponent == rhs.exponent && *lhs.base == *rhs.base;
        } else {
          return *lhs.operand == *rhs.operand;
        }
      },
      a.node);
}

ExprPtr make_var(char name) { return std::make_shared<const Expr>(Expr{Var{name}}); }
ExprPtr make_param() { return std::make_shared<const Expr>(Expr{Param{}}); }
ExprPtr make_const(BigRational value) { return std::make_shared<const Expr>(Expr{Const{std::move(value)}}); }
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_neg(ExprPtr operand) { return std::make_shared<const Expr>(Expr{Neg{std::move(operand)}}); }
ExprPtr make_pow(ExprPtr base, int exponent) {
  return std::make_shared<const Expr>(Expr{Pow{std::move(base), exponent}});
}
ExprPtr make_inv(ExprPtr operand) { return std::make_shared<const Expr>(Expr{Inv{std::move(operand)}}); }
ExprPtr make_qexp(ExprPtr operand) { return std::make_shared<const Expr>(Expr{QExp{std::move(operand)}}); }

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += ", ";
    out += "'" + expected[i] + "'";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected one of " +
                         describe_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { x, y, q, number, lparen, rparen, plus, minus, star, slash, caret, qexp, inv, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  bool digit_at(std::size_t i) const { return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i])); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::end, start, "end of input"};
      return;
    }
    const char c = src_[pos_];
    if (digit_at(pos_)) {
      while (digit_at(pos_)) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '/' && digit_at(pos_ + 1)) {
        ++pos_;
        while (digit_at(pos_)) ++pos_;
      }
      current_ = {Tok::number, start, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    if (src_.substr(pos_, 3) == "inv") {
      pos_ += 3;
      current_ = {Tok::inv, start, "inv"};
      return;
    }
    ++pos_;
    switch (c) {
      case 'x': current_ = {Tok::x, start, "x"}; return;
      case 'y': current_ = {Tok::y, start, "y"}; return;
      case 'q': current_ = {Tok::q, start, "q"}; return;
      case 'l': current_ = {Tok::qexp, start, "l"}; return;
      case '(': current_ = {Tok::lparen, start, "("}; return;
      case ')': current_ = {Tok::rparen, start, ")"}; return;
      case '+': current_ = {Tok::plus, start, "+"}; return;
      case '-': current_ = {Tok::minus, start, "-"}; return;
      case '*': current_ = {Tok::star, start, "*"}; return;
      case '/': current_ = {Tok::slash, start, "/"}; return;
      case '^': current_ = {Tok::caret, start, "^"}; return;
      default:
        throw ParseError(start, {"x", "y", "q", "number", "(", "l(", "inv(", "-"},
                         "unexpected character '" + std::string(1, c) + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Tok::end, 0, ""};
};

const std::vector<std::string> kAtomStarts = {"x", "y", "q", "number", "(", "l(", "inv("};

bool starts_atom(Tok t) {
  switch (t) {
    case Tok::x:
    case Tok::y:
    case Tok::q:
    case Tok::number:
    case Tok::lparen:
    case Tok::qexp:
    case Tok::inv: return true;
    default: return false;
  }
}

bool is_atomic(const Expr& e) {
  return std::holds_alternative<Var>(e.node) || std::holds_alternative<Param>(e.node) ||
         std::holds_alternative<Const>(e.node);
}

std::string found(const Token& t) { return t.kind == Tok::end ? t.text : "'" + t.text + "'"; }

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (lex_.peek().kind != Tok::end) {
      std::vector<std::string> expected = {"+", "-", "*", "/", "^"};
      expected.insert(expected.end(), kAtomStarts.begin(), kAtomStarts.end());
      throw ParseError(lex_.peek().offset, expected, found(lex_.peek()));
    }
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      const BinaryOp op = lex_.take().kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
      lhs = make_binary(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k == Tok::star || k == Tok::slash) {
        lex_.take();
        lhs = make_binary(k == Tok::star ? BinaryOp::mul : BinaryOp::div, lhs, unary());
      } else if (starts_atom(k)) {
        lhs = make_binary(BinaryOp::mul, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      return make_neg(unary());
    }
    return factor();
  }

  ExprPtr factor() {
    bool parenthesized = false;
    ExprPtr base = atom(parenthesized);
    if (lex_.peek().kind != Tok::caret) return base;
    lex_.take();
    bool negative = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      negative = true;
    }
    const Token& t = lex_.peek();
    if (t.kind != Tok::number || t.text.find('/') != std::string::npos) {
      throw ParseError(t.offset, negative ? std::vector<std::string>{"integer"} : std::vector<std::string>{"integer", "-"},
                       found(t));
    }
    long magnitude = 0;
    try {
      magnitude = std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(t.offset, {"integer"}, "exponent out of range");
    }
    if (magnitude > 100000) throw ParseError(t.offset, {"integer"}, "exponent out of range");
    lex_.take();
    const int exponent = static_cast<int>(negative ? -magnitude : magnitude);
    if (parenthesized && exponent == -1 && !is_atomic(*base)) return make_inv(base);
    return make_pow(base, exponent);
  }

  ExprPtr atom(bool& parenthesized) {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::x: lex_.take(); return make_var('x');
      case Tok::y: lex_.take(); return make_var('y');
      case Tok::q: lex_.take(); return make_param();
      case Tok::number: {
        lex_.take();
        try {
          return make_const(parse_rational(t.text));
        } catch (const std::invalid_argument&) {
          throw ParseError(t.offset, {"number"}, "'" + t.text + "' (zero denominator)");
        }
      }
      case Tok::lparen: {
        parenthesized = true;
        return group();
      }
      case Tok::qexp:
      case Tok::inv: {
        lex_.take();
        if (lex_.peek().kind != Tok::lparen) throw ParseError(lex_.peek().offset, {"("}, found(lex_.peek()));
        ExprPtr inner = group();
        return t.kind == Tok::qexp ? make_qexp(inner) : make_inv(inner);
      }
      default: {
        std::vector<std::string> expected = kAtomStarts;
        expected.push_back("-");
        throw ParseError(t.offset, expected, found(t));
      }
    }
  }

  // '(' expr ')'
  ExprPtr group() {
    lex_.take();
    ExprPtr inner = expr();
    if (lex_.peek().kind != Tok::rparen) {
      std::vector<std::string> expected = {")", "+", "-", "*", "/", "^"};
      expected.insert(expected.end(), kAtomStarts.begin(), kAtomStarts.end());
      throw ParseError(lex_.peek().offset, expected, found(lex_.peek()));
    }
    lex_.take();
    return inner;
  }

  Lexer lex_;
};

bool is_sum(const Expr& e) {
  const auto* b = std::get_if<Binary>(&e.node);
  return b != nullptr && (b->op == BinaryOp::add || b->op == BinaryOp::sub);
}

bool is_binary(const Expr& e) { return std::holds_alternative<Binary>(e.node); }

bool prints_as_atom(const Expr& e) {
  if (const auto* c = std::get_if<Const>(&e.node)) return c->value.get_den() == 1;
  return std::holds_alternative<Var>(e.node) || std::holds_alternative<Param>(e.node) ||
         std::holds_alternative<QExp>(e.node) || std::holds_alternative<Inv>(e.node);
}

std::string parens(const std::string& s) { return "(" + s + ")"; }

}  // namespace

ExprPtr parse_expr(std::string_view source) { return Parser(source).parse_all(); }

std::string format_expr(const Expr& e) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Var>) {
          return std::string(1, node.name);
        } else if constexpr (std::is_same_v<T, Param>) {
          return "q";
        } else if constexpr (std::is_same_v<T, Const>) {
          return node.value.get_str();
        } else if constexpr (std::is_same_v<T, Binary>) {
          const std::string lhs = format_expr(*node.lhs);
          const std::string rhs = format_expr(*node.rhs);
          switch (node.op) {
            case BinaryOp::add: return lhs + " + " + (is_sum(*node.rhs) ? parens(rhs) : rhs);
            case BinaryOp::sub: return lhs + " - " + (is_sum(*node.rhs) ? parens(rhs) : rhs);
            case BinaryOp::mul:
            case BinaryOp::div: {
              const std::string l = is_sum(*node.lhs) ? parens(lhs) : lhs;
              const std::string r = is_binary(*node.rhs) ? parens(rhs) : rhs;
              return l + (node.op == BinaryOp::mul ? "*" : " / ") + r;
            }
          }
          return "?";
        } else if constexpr (std::is_same_v<T, Neg>) {
          return "-" + parens(format_expr(*node.operand));
        } else if constexpr (std::is_same_v<T, Pow>) {
          const std::string base = format_expr(*node.base);
          return (prints_as_atom(*node.base) ? base : parens(base)) + "^" + std::to_string(node.exponent);
        } else if constexpr (std::is_same_v<T, Inv>) {
          return "inv" + parens(format_expr(*node.operand));
        } else {
          return "l" + parens(format_expr(*node.operand));
        }
      },
      e.node);
}

}  // namespace qpentagon::cli
