#include <gtest/gtest.h>

#include "expr.hpp"
#include "expr_gen.hpp"
#include "qpentagon/identities.hpp"

using namespace qpentagon;
using namespace qpentagon::cli;

namespace {

ExprPtr x() { return make_var('x'); }
ExprPtr y() { return make_var('y'); }
ExprPtr num(long v) { return make_const(BigRational(v)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return make_binary(BinaryOp::mul, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return make_binary(BinaryOp::sub, std::move(a), std::move(b)); }

const QRat q = QRat::q();

NCSeries<QRat> series(std::string_view src, int degree) {
  return eval_series(*parse_expr(src), SeriesRing<QRat>(degree, q));
}

}  // namespace

TEST(ParseExpr, KeepsProductOrder) {
  EXPECT_EQ(*parse_expr("y*x"), *mul(y(), x()));
  EXPECT_FALSE(*parse_expr("y*x") == *parse_expr("x*y"));
}

TEST(ParseExpr, NestedQexpAndInverse) {
  EXPECT_EQ(*parse_expr("l(inv(1-x)*y)"), *make_qexp(mul(make_inv(sub(num(1), x())), y())));
}

TEST(ParseExpr, IntegerExponents) {
  EXPECT_EQ(*parse_expr("x^-2"), *make_pow(x(), -2));
  EXPECT_EQ(*parse_expr("x^-1"), *make_pow(x(), -1));
  EXPECT_EQ(*parse_expr("(1-x)^-1"), *make_inv(sub(num(1), x())));
  EXPECT_EQ(*parse_expr("(1-x)^-2"), *make_pow(sub(num(1), x()), -2));
  EXPECT_EQ(*parse_expr("(x)^-1"), *make_pow(x(), -1));
}

TEST(ParseExpr, JuxtapositionIsOrderedProduct) {
  EXPECT_EQ(*parse_expr("l(x)l(y)"), *parse_expr("l(x)*l(y)"));
  EXPECT_EQ(*parse_expr("2x y"), *parse_expr("2*x*y"));
  EXPECT_EQ(*parse_expr("q x^2"), *mul(make_param(), make_pow(x(), 2)));
}

TEST(ParseExpr, PrecedenceAndAssociativity) {
  EXPECT_EQ(*parse_expr("x - y - 1"), *sub(sub(x(), y()), num(1)));
  EXPECT_EQ(*parse_expr("-x*y"), *mul(make_neg(x()), y()));
  EXPECT_EQ(*parse_expr("x + y*x"), *make_binary(BinaryOp::add, x(), mul(y(), x())));
  EXPECT_EQ(*parse_expr("2/5"), *make_const(BigRational(2, 5)));
  EXPECT_EQ(*parse_expr("2 / 5"), *make_binary(BinaryOp::div, num(2), num(5)));
}

TEST(ParseExpr, ErrorsCarryOffsetAndExpectedTokens) {
  try {
    parse_expr("x + ");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "x"), e.expected().end());
  }
  try {
    parse_expr("l x");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"("});
  }
  try {
    parse_expr("(x");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
    EXPECT_EQ(e.expected().front(), ")");
  }
  EXPECT_THROW(parse_expr("x ^ y"), ParseError);
  EXPECT_THROW(parse_expr("x^1/2"), ParseError);
  EXPECT_THROW(parse_expr("x )"), ParseError);
  EXPECT_THROW(parse_expr("z"), ParseError);
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("1/0"), ParseError);
  EXPECT_THROW(parse_expr("x^99999999999999999999"), ParseError);
}

TEST(FormatExpr, Examples) {
  EXPECT_EQ(format_expr(*parse_expr("y*x")), "y*x");
  EXPECT_EQ(format_expr(*make_neg(mul(x(), y()))), "-(x*y)");
  EXPECT_EQ(format_expr(*parse_expr("l(x)l(y)")), "l(x)*l(y)");
  EXPECT_EQ(format_expr(*parse_expr("(x+y)^2")), "(x + y)^2");
}

TEST(FormatExpr, FiveFactorRightSideRoundTrips) {
  const auto e = parse_expr("l(inv(1-x)*y)*l(-(x*inv(1-x-y)*y))*l(x*inv(1-y))");
  EXPECT_EQ(*parse_expr(format_expr(*e)), *e);
}

TEST(FormatExpr, RoundTripOnGeneratedTrees) {
  qpentagon::testing::ExprGenerator gen(2024);
  for (int i = 0; i < 500; ++i) {
    const ExprPtr e = gen();
    const std::string text = format_expr(*e);
    const ExprPtr parsed = parse_expr(text);
    EXPECT_EQ(*parsed, *e) << text;
    EXPECT_EQ(*parse_expr(format_expr(*parsed)), *parsed) << text;
  }
}

TEST(EvalExpr, Examples) {
  const SeriesRing<QRat> r1(1, q);
  EXPECT_EQ(series("l(x)*l(y)", 1), r1.one() + (r1.x() + r1.y()).scaled((QRat(1L) - q).inverse()));
  const SeriesRing<QRat> r3(3, q);
  EXPECT_EQ(series("inv(1-x)", 3), r3.one() + r3.x() + nc_pow(r3.x(), 2) + nc_pow(r3.x(), 3));
  EXPECT_EQ(series("l(y)", 0), SeriesRing<QRat>(0, q).one());
  const SeriesRing<QRat> r2(2, q);
  EXPECT_EQ(series("y x", 2), r2.monomial(q, 1, 1));
  EXPECT_EQ(series("(1-x)^-2", 2), r2.one() + r2.x().scaled(QRat(2L)) + r2.monomial(QRat(3L), 2, 0));
  EXPECT_EQ(series("x / (1-q)", 2), r2.x().scaled((QRat(1L) - q).inverse()));
  EXPECT_EQ(series("2/5*y", 2), r2.y().scaled(QRat(BigRational(2, 5))));
}

TEST(EvalExpr, Errors) {
  EXPECT_THROW(series("inv(y)", 3), EvalError);
  EXPECT_THROW(series("l(1+x)", 3), EvalError);
  EXPECT_THROW(series("x^-1", 3), EvalError);
  EXPECT_THROW(series("x / y", 3), EvalError);
  EXPECT_THROW(series("x / (1-1)", 3), EvalError);
  EXPECT_THROW(series("y^-2", 3), EvalError);
}

TEST(EvalExpr, SpecializedModeMatchesEvaluatedSymbolicMode) {
  const BigRational q0(2, 5);
  const auto sym = series("l(x)*l(-(x*y))*l(y)", 5);
  const auto specialized = eval_series(*parse_expr("l(x)*l(-(x*y))*l(y)"), SeriesRing<BigRational>(5, q0));
  ASSERT_EQ(sym.terms().size(), specialized.terms().size());
  for (const auto& [e, c] : sym.terms()) EXPECT_EQ(qrat_eval(c, q0), specialized.coefficient(e.m, e.n));
}

TEST(EvalTorus, LaurentArithmetic) {
  using T = TorusElem<QRat>;
  EXPECT_EQ(eval_torus(*parse_expr("y*x^-1"), q), T::monomial(q, q.inverse(), -1, 1));
  EXPECT_EQ(eval_torus(*parse_expr("q*inv(-q^2*x^-1*y^-1)"), q), T::monomial(q, QRat(-1L), 1, 1));
  EXPECT_EQ(eval_torus(*parse_expr("x^-1*(q-y)"), q), build_Y(q).at(2));
  EXPECT_EQ(eval_torus(*parse_expr("(q-x)*y^-1"), q), build_Y(q).at(4));
  EXPECT_EQ(eval_torus(*parse_expr("-q*x^-1*(q-x-y)*y^-1"), q), build_Y(q).at(3));
  EXPECT_THROW(eval_torus(*parse_expr("inv(1+x)"), q), EvalError);
  EXPECT_THROW(eval_torus(*parse_expr("l(x)"), q), EvalError);
}
