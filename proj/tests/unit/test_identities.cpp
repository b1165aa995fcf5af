#include <gtest/gtest.h>

#include <set>

#include "matrix_rep.hpp"
#include "qpentagon/errors.hpp"
#include "qpentagon/fault.hpp"
#include "qpentagon/identities.hpp"

using namespace qpentagon;
namespace qt = qpentagon::testing;

namespace {

const QRat q = QRat::q();
const QMode symbolic = QMode::symbolic();

QRat one_minus_q() { return QRat(1L) - q; }

int witness_degree(const VerificationReport& r) { return r.witness->m + r.witness->n; }

}  // namespace

TEST(Identities, QBinomialTheorem) {
  EXPECT_TRUE(verify_qbinomial_theorem(0, symbolic).holds());
  EXPECT_TRUE(verify_qbinomial_theorem(2, symbolic).holds());
  EXPECT_TRUE(verify_qbinomial_theorem(6, symbolic).holds());
  const SeriesRing<QRat> r(2, q);
  EXPECT_EQ(nc_pow(r.x() + r.y(), 2).coefficient(1, 1), QRat(1L) + q);
}

TEST(Identities, Schutzenberger) {
  EXPECT_TRUE(verify_schutzenberger(3, symbolic).holds());
  EXPECT_TRUE(verify_schutzenberger(0, symbolic).holds());
}

TEST(Identities, FunctionalEquation) {
  EXPECT_TRUE(verify_functional_equation(5, symbolic).holds());
  EXPECT_TRUE(verify_functional_equation(0, symbolic).holds());
  const SeriesRing<QRat> r(1, q);
  const auto sides = functional_equation_sides(r);
  EXPECT_EQ(sides.lhs, r.one() + r.monomial(q / one_minus_q(), 1, 0));
  EXPECT_EQ(sides.rhs, sides.lhs);
  // Summation form: l(z) - l(qz) = z l(z).
  const SeriesRing<QRat> r5(5, q);
  const auto lx = qexp(r5.x());
  EXPECT_EQ(lx - qexp(nc_scale_vars(r5.x(), q)), r5.x() * lx);
}

TEST(Identities, Conjugations) {
  EXPECT_TRUE(verify_conjugations(4, symbolic).holds());
  EXPECT_TRUE(verify_conjugations(1, symbolic).holds());
  const SeriesRing<QRat> r(2, q);
  const auto sides = conjugation_sides(r);
  EXPECT_EQ(sides[0].lhs, r.x() - r.x() * r.y());
  EXPECT_EQ(sides[0].rhs, r.x() - r.x() * r.y());
  const SeriesRing<QRat> r1(1, q);
  EXPECT_EQ(conjugation_sides(r1)[0].lhs, r1.x());
}

TEST(Identities, FaddeevVolkov) {
  EXPECT_TRUE(verify_fv_relation(4, symbolic).holds());
  EXPECT_TRUE(verify_fv_relation(1, symbolic).holds());
  const SeriesRing<QRat> r(1, q);
  const auto expected = r.one() + (r.x() + r.y()).scaled(one_minus_q().inverse());
  EXPECT_EQ(fv_sides(r).lhs, expected);
  // With the factors swapped the product is l(x+y), not l(x+y-xy).
  const SeriesRing<QRat> r4(4, q);
  const auto swapped = nc_eq(qexp(r4.x()) * qexp(r4.y()), fv_sides(r4).rhs);
  ASSERT_FALSE(swapped.equal);
  EXPECT_EQ(swapped.witness->m + swapped.witness->n, 2);
}

TEST(Identities, Pentagon) {
  EXPECT_TRUE(verify_pentagon(6, symbolic).holds());
  EXPECT_TRUE(verify_pentagon(0, symbolic).holds());
  const SeriesRing<QRat> r(2, q);
  const auto sides = pentagon_sides(r);
  // l(y)l(x) contributes y x / (1-q)^2 = q xy / (1-q)^2; the right side gives
  // xy/(1-q)^2 - xy/(1-q), which is the same.
  const QRat expected = q / (one_minus_q() * one_minus_q());
  EXPECT_EQ(sides.lhs.coefficient(1, 1), expected);
  EXPECT_EQ(sides.rhs.coefficient(1, 1), expected);
  EXPECT_TRUE(verify_pentagon(2, symbolic).holds());
}

TEST(Identities, FiveFactor) {
  EXPECT_TRUE(verify_five_factor(6, symbolic).holds());
  const SeriesRing<QRat> r(3, q);
  const auto middle = five_factor_arguments(r)[1];
  const auto expected = -(r.x() * r.y()) - r.monomial(QRat(1L), 2, 1) - r.monomial(QRat(1L), 1, 2);
  EXPECT_EQ(middle, expected);
  const SeriesRing<QRat> r1(1, q);
  const auto sides = five_factor_sides(r1);
  const auto degree_one = r1.one() + (r1.x() + r1.y()).scaled(one_minus_q().inverse());
  EXPECT_EQ(sides.lhs, degree_one);
  EXPECT_EQ(sides.rhs, degree_one);
}

TEST(Identities, QuintupleForms) {
  const auto reports = verify_section4_forms(6, symbolic);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].identity, "section4_x_form");
  EXPECT_EQ(reports[1].identity, "section4_y_form");
  EXPECT_TRUE(all_hold(reports));
  const SeriesRing<QRat> r(6, q);
  for (const auto& sides : x_form_reductions(r)) EXPECT_EQ(sides.lhs, sides.rhs);
  for (const auto& sides : y_form_reductions(r)) EXPECT_EQ(sides.lhs, sides.rhs);
  // The X-form is the pentagon written with quintuple entries.
  EXPECT_EQ(section4_x_sides(r).lhs, pentagon_sides(r).lhs);
  EXPECT_EQ(section4_x_sides(r).rhs, pentagon_sides(r).rhs);
  EXPECT_EQ(section4_y_sides(r).rhs, five_factor_sides(r).rhs);
}

TEST(Identities, HoldAtEveryLowerDegree) {
  for (const auto& name : series_identity_names()) {
    for (int d = 0; d <= 6; ++d) {
      EXPECT_TRUE(run_check(name, d, symbolic).holds()) << name << " at degree " << d;
    }
  }
}

TEST(Identities, HoldUnderEveryAdmissibleSpecialization) {
  for (const char* q0 : {"2/5", "1/3", "-3/7", "5/2", "-2"}) {
    const auto reports = run_all(6, QMode::parse(q0));
    EXPECT_TRUE(all_hold(reports)) << "q = " << q0;
  }
}

TEST(RunAll, SymbolicAndSpecializedSuites) {
  const auto sym = run_all(6, symbolic);
  EXPECT_EQ(sym.size(), all_check_names().size());
  EXPECT_TRUE(all_hold(sym));
  EXPECT_TRUE(std::is_sorted(sym.begin(), sym.end(),
                             [](const auto& a, const auto& b) { return a.identity < b.identity; }));
  for (const auto& r : sym) {
    EXPECT_EQ(r.degree, 6);
    EXPECT_EQ(r.q_mode, "symbolic");
    EXPECT_FALSE(r.witness.has_value());
  }
  const auto specialized = run_all(10, QMode::specialized(BigRational(2, 5)));
  EXPECT_TRUE(all_hold(specialized));
  EXPECT_EQ(specialized.front().q_mode, "2/5");
}

TEST(RunAll, SerialAndParallelAgree) {
  auto strip = [](std::vector<VerificationReport> v) {
    for (auto& r : v) r.elapsed_millis = 0;
    return v;
  };
  EXPECT_EQ(strip(run_all(4, symbolic, true)), strip(run_all(4, symbolic, false)));
}

TEST(RunAll, RejectsBadInputBeforeRunning) {
  EXPECT_THROW(run_all(6, QMode::specialized(BigRational(1))), InadmissibleSpecialization);
  EXPECT_THROW(run_all(-1, symbolic), std::invalid_argument);
  EXPECT_THROW(run_check("nonsuch", 3, symbolic), std::invalid_argument);
  EXPECT_THROW(run_selected({"pentagon", "nonsuch"}, 3, symbolic), std::invalid_argument);
}

TEST(Mutations, TwistOffByOneBreaksSchutzenberger) {
  const fault::ScopedMutation bug(fault::Mutation::twist_off_by_one);
  const auto r = verify_schutzenberger(4, symbolic);
  ASSERT_FALSE(r.holds());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(witness_degree(r), 2);
  EXPECT_NE(r.witness->lhs, r.witness->rhs);
}

TEST(Mutations, MiddleSignBreaksPentagonAtDegreeTwo) {
  const fault::ScopedMutation bug(fault::Mutation::pentagon_middle_sign);
  const auto r = verify_pentagon(4, symbolic);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(witness_degree(r), 2);
}

TEST(Mutations, DroppedPascalFactorBreaksBinomialTheorem) {
  const fault::ScopedMutation bug(fault::Mutation::pascal_drop_qk);
  const auto r = verify_qbinomial_theorem(4, symbolic);
  ASSERT_FALSE(r.holds());
  EXPECT_LE(witness_degree(r), 3);
}

TEST(Mutations, ScopeRestoresPreviousState) {
  {
    const fault::ScopedMutation bug(fault::Mutation::pentagon_middle_sign);
    EXPECT_EQ(fault::active(), fault::Mutation::pentagon_middle_sign);
  }
  EXPECT_EQ(fault::active(), fault::Mutation::none);
  EXPECT_TRUE(verify_pentagon(4, symbolic).holds());
}

TEST(Witness, ReproducesCoefficientsOfBothSides) {
  const fault::ScopedMutation bug(fault::Mutation::pentagon_middle_sign);
  const auto report = verify_pentagon(5, symbolic);
  ASSERT_TRUE(report.witness.has_value());
  const auto sides = pentagon_sides(SeriesRing<QRat>(5, q));
  const auto& w = *report.witness;
  EXPECT_EQ(w.lhs, to_string(sides.lhs.coefficient(w.m, w.n)));
  EXPECT_EQ(w.rhs, to_string(sides.rhs.coefficient(w.m, w.n)));
  // Every key before the witness agrees.
  for (const auto& [e, c] : sides.lhs.terms()) {
    if (e < Exponent{w.m, w.n}) EXPECT_EQ(sides.rhs.coefficient(e.m, e.n), c);
  }
}

TEST(Report, JsonRoundTripAndSchema) {
  VerificationReport r;
  r.identity = "pentagon";
  r.degree = 6;
  r.q_mode = "2/5";
  r.status = Status::fails;
  r.witness = Witness{1, 1, "q", "1"};
  r.elapsed_millis = 3;
  const std::string json = to_json(r);
  EXPECT_EQ(json,
            R"({"identity":"pentagon","degree":6,"q_mode":"2/5","status":"fails",)"
            R"("witness":{"m":1,"n":1,"lhs":"q","rhs":"1"},"elapsed_millis":3})");
  EXPECT_EQ(report_from_json(json), r);

  r.status = Status::holds;
  r.witness.reset();
  EXPECT_EQ(to_json(r).find("witness"), std::string::npos);
  EXPECT_EQ(report_from_json(to_json(r)), r);
}

TEST(MatrixOracle, SchutzenbergerAndConjugationHoldAsMatrices) {
  const qt::QPlaneMatrices rep(BigRational(1, 3), BigRational(1, 5), 10, 5);
  const auto x = rep.x();
  const auto y = rep.y();
  const auto one = rep.one();
  EXPECT_EQ(rep.qexp(x + y), rep.qexp(x) * rep.qexp(y));
  EXPECT_EQ(rep.qexp(y) * x * rep.inv(rep.qexp(y)), x * (one - y));
  EXPECT_EQ(rep.qexp(y) * rep.qexp(x), rep.qexp(x + y - x * y));
  EXPECT_FALSE(rep.qexp(y) * rep.qexp(x) == rep.qexp(x) * rep.qexp(y));
}
