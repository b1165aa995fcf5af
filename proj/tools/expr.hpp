#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpentagon/bigrational.hpp"
#include "qpentagon/errors.hpp"
#include "qpentagon/ncseries.hpp"
#include "qpentagon/torus.hpp"

// Surface syntax for noncommutative expressions in x, y and q:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | factor)*     juxtaposition = product
//   unary  := '-' unary | factor
//   factor := atom ('^' '-'? int)?
//   atom   := 'x' | 'y' | 'q' | rational | '(' expr ')' | 'l' '(' expr ')'
//           | 'inv' '(' expr ')'
//
// Products keep their written order. A rational literal is digits with an
// optional "/digits" suffix written without spaces ("2/5"); '/' elsewhere is
// division, which evaluation only allows by scalars. '^-1' applied to a
// parenthesized non-atomic expression is sugar for inv(...).

namespace qpentagon::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Var {
  char name;  // 'x' or 'y'
};
struct Param {};
struct Const {
  BigRational value;
};
enum class BinaryOp { add, sub, mul, div };
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Neg {
  ExprPtr operand;
};
struct Pow {
  ExprPtr base;
  int exponent;
};
struct Inv {
  ExprPtr operand;
};
struct QExp {
  ExprPtr operand;
};

struct Expr {
  std::variant<Var, Param, Const, Binary, Neg, Pow, Inv, QExp> node;
};

/// Deep structural equality.
bool operator==(const Expr& a, const Expr& b);

ExprPtr make_var(char name);
ExprPtr make_param();
ExprPtr make_const(BigRational value);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_pow(ExprPtr base, int exponent);
ExprPtr make_inv(ExprPtr operand);
ExprPtr make_qexp(ExprPtr operand);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  /// Byte offset into the source where parsing stopped.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

ExprPtr parse_expr(std::string_view source);

/// Canonical text; parse_expr(format_expr(e)) is structurally equal to e for
/// every e produced by parse_expr.
std::string format_expr(const Expr& e);

/// Failure while evaluating a well-formed expression.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <Coefficient C>
C scalar_divisor(const C& c, bool is_scalar) {
  if (!is_scalar) throw EvalError("division is only defined by scalars in q; write inv(...) instead");
  if (is_zero(c)) throw EvalError("division by zero");
  return C(C(1L) / c);
}

}  // namespace detail

/// Value of e as a truncated series in the ring's q-mode.
template <Coefficient C>
NCSeries<C> eval_series(const Expr& e, const SeriesRing<C>& ring) {
  return std::visit(
      [&](const auto& node) -> NCSeries<C> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Var>) {
          return node.name == 'x' ? ring.x() : ring.y();
        } else if constexpr (std::is_same_v<T, Param>) {
          return ring.constant(ring.q());
        } else if constexpr (std::is_same_v<T, Const>) {
          return ring.constant(C(node.value));
        } else if constexpr (std::is_same_v<T, Binary>) {
          const auto lhs = eval_series(*node.lhs, ring);
          const auto rhs = eval_series(*node.rhs, ring);
          switch (node.op) {
            case BinaryOp::add: return lhs + rhs;
            case BinaryOp::sub: return lhs - rhs;
            case BinaryOp::mul: return lhs * rhs;
            case BinaryOp::div: {
              const bool scalar = rhs.terms().size() == 1 && rhs.terms().begin()->first == Exponent{0, 0};
              return lhs.scaled(detail::scalar_divisor(rhs.constant_term(), scalar || rhs.is_zero()));
            }
          }
          throw EvalError("unknown binary operator");
        } else if constexpr (std::is_same_v<T, Neg>) {
          return -eval_series(*node.operand, ring);
        } else if constexpr (std::is_same_v<T, Pow>) {
          if (node.exponent >= 0) return nc_pow(eval_series(*node.base, ring), node.exponent);
          if (std::holds_alternative<Var>(node.base->node)) {
            throw EvalError("negative powers of x or y need the quantum-torus mode (--torus)");
          }
          try {
            return nc_pow(nc_inv(eval_series(*node.base, ring)), -node.exponent);
          } catch (const NotInvertible&) {
            throw EvalError("negative power of a series with zero constant term");
          }
        } else if constexpr (std::is_same_v<T, Inv>) {
          try {
            return nc_inv(eval_series(*node.operand, ring));
          } catch (const NotInvertible&) {
            throw EvalError("inv(...) of a series with zero constant term");
          }
        } else {
          try {
            return qexp(eval_series(*node.operand, ring));
          } catch (const NonzeroConstantTerm&) {
            throw EvalError("l(...) needs an argument with zero constant term");
          }
        }
      },
      e.node);
}

/// Value of e as an exact Laurent polynomial in the quantum torus. Inverses
/// are limited to monomials and l(...) is rejected.
template <Coefficient C>
TorusElem<C> eval_torus(const Expr& e, const C& q) {
  using T = TorusElem<C>;
  const auto invert = [](const T& t) {
    try {
      return torus_monomial_inv(t);
    } catch (const NotInvertible&) {
      throw EvalError("only monomials are invertible in the quantum torus");
    }
  };
  return std::visit(
      [&](const auto& node) -> T {
        using N = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<N, Var>) {
          return node.name == 'x' ? T::x(q) : T::y(q);
        } else if constexpr (std::is_same_v<N, Param>) {
          return T::constant(q, q);
        } else if constexpr (std::is_same_v<N, Const>) {
          return T::constant(q, C(node.value));
        } else if constexpr (std::is_same_v<N, Binary>) {
          const auto lhs = eval_torus(*node.lhs, q);
          const auto rhs = eval_torus(*node.rhs, q);
          switch (node.op) {
            case BinaryOp::add: return lhs + rhs;
            case BinaryOp::sub: return lhs - rhs;
            case BinaryOp::mul: return torus_mul(lhs, rhs);
            case BinaryOp::div: {
              const bool scalar = rhs.is_zero() || (rhs.is_monomial() && rhs.terms().begin()->first == Exponent{0, 0});
              return lhs.scaled(detail::scalar_divisor(rhs.coefficient(0, 0), scalar));
            }
          }
          throw EvalError("unknown binary operator");
        } else if constexpr (std::is_same_v<N, Neg>) {
          return -eval_torus(*node.operand, q);
        } else if constexpr (std::is_same_v<N, Pow>) {
          T base = eval_torus(*node.base, q);
          if (node.exponent < 0) base = invert(base);
          T acc = T::constant(q, C(1L));
          for (int i = 0; i < std::abs(node.exponent); ++i) acc = torus_mul(acc, base);
          return acc;
        } else if constexpr (std::is_same_v<N, Inv>) {
          return invert(eval_torus(*node.operand, q));
        } else {
          throw EvalError("l(...) is not a Laurent polynomial; drop --torus to evaluate it as a series");
        }
      },
      e.node);
}

}  // namespace qpentagon::cli
