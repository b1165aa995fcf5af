#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qpentagon/fault.hpp"
#include "qpentagon/ncseries.hpp"
#include "qpentagon/qmode.hpp"
#include "qpentagon/qspecial.hpp"
#include "qpentagon/report.hpp"
#include "qpentagon/torus.hpp"

namespace qpentagon {

/// The two sides of one series identity at a fixed truncation degree.
template <Coefficient C>
struct Sides {
  NCSeries<C> lhs;
  NCSeries<C> rhs;
};

// Builders for both sides of every identity. The verify_* functions compare
// these coefficient by coefficient; tests and the CLI catalog reuse them.

/// l(x + y) against l(x) l(y).
template <Coefficient C>
Sides<C> schutzenberger_sides(const SeriesRing<C>& r) {
  return {qexp(r.x() + r.y()), qexp(r.x()) * qexp(r.y())};
}

/// l(qx) against (1 - x) l(x).
template <Coefficient C>
Sides<C> functional_equation_sides(const SeriesRing<C>& r) {
  const auto x = r.x();
  return {qexp(nc_scale_vars(x, r.q())), (r.one() - x) * qexp(x)};
}

/// l(y) x l(y)^-1 = x(1-y); l(y)^-1 x l(y) = x(1-y)^-1;
/// l(x) y l(x)^-1 = (1-x)^-1 y; l(y)^-1 l(x) xy l(x)^-1 l(y) = x(1-x-y)^-1 y.
template <Coefficient C>
std::array<Sides<C>, 4> conjugation_sides(const SeriesRing<C>& r) {
  const auto x = r.x();
  const auto y = r.y();
  const auto one = r.one();
  const auto lx = qexp(x);
  const auto ly = qexp(y);
  const auto lx_inv = nc_inv(lx);
  const auto ly_inv = nc_inv(ly);
  return {{
      {ly * x * ly_inv, x * (one - y)},
      {ly_inv * x * ly, x * nc_inv(one - y)},
      {lx * y * lx_inv, nc_inv(one - x) * y},
      {ly_inv * lx * (x * y) * lx_inv * ly, x * nc_inv(one - x - y) * y},
  }};
}

/// l(y) l(x) against l(x + y - xy).
template <Coefficient C>
Sides<C> fv_sides(const SeriesRing<C>& r) {
  const auto x = r.x();
  const auto y = r.y();
  return {qexp(y) * qexp(x), qexp(x + y - x * y)};
}

/// l(y) l(x) against l(x) l(-xy) l(y).
template <Coefficient C>
Sides<C> pentagon_sides(const SeriesRing<C>& r) {
  const auto x = r.x();
  const auto y = r.y();
  auto middle = -(x * y);
  if (fault::active() == fault::Mutation::pentagon_middle_sign) middle = x * y;
  return {qexp(y) * qexp(x), qexp(x) * qexp(middle) * qexp(y)};
}

/// The three arguments (1-x)^-1 y, -x(1-x-y)^-1 y, x(1-y)^-1.
template <Coefficient C>
std::array<NCSeries<C>, 3> five_factor_arguments(const SeriesRing<C>& r) {
  const auto x = r.x();
  const auto y = r.y();
  const auto one = r.one();
  return {nc_inv(one - x) * y, -(x * nc_inv(one - x - y) * y), x * nc_inv(one - y)};
}

/// l(x) l(y) against l((1-x)^-1 y) l(-x(1-x-y)^-1 y) l(x(1-y)^-1).
template <Coefficient C>
Sides<C> five_factor_sides(const SeriesRing<C>& r) {
  const auto args = five_factor_arguments(r);
  return {qexp(r.x()) * qexp(r.y()), qexp(args[0]) * qexp(args[1]) * qexp(args[2])};
}

/// q X_2^-1, q X_3^-1, q X_4^-1 normal-ordered into series, against x, -xy, y.
template <Coefficient C>
std::array<Sides<C>, 3> x_form_reductions(const SeriesRing<C>& r) {
  const auto quint = build_X(r.q());
  const int d = r.trunc();
  return {{
      {q_inverse_series(quint.at(2), d), r.x()},
      {q_inverse_series(quint.at(3), d), -(r.x() * r.y())},
      {q_inverse_series(quint.at(4), d), r.y()},
  }};
}

/// q Y_4^-1, q Y_3^-1, q Y_2^-1 normal-ordered into series, against the
/// five-factor arguments (1-x)^-1 y, -x(1-x-y)^-1 y, x(1-y)^-1.
template <Coefficient C>
std::array<Sides<C>, 3> y_form_reductions(const SeriesRing<C>& r) {
  const auto quint = build_Y(r.q());
  const auto args = five_factor_arguments(r);
  const int d = r.trunc();
  return {{
      {q_inverse_series(quint.at(4), d), args[0]},
      {q_inverse_series(quint.at(3), d), args[1]},
      {q_inverse_series(quint.at(2), d), args[2]},
  }};
}

/// l(X_1) l(X_5) against l(qX_2^-1) l(qX_3^-1) l(qX_4^-1), every argument
/// taken from the quintuple.
template <Coefficient C>
Sides<C> section4_x_sides(const SeriesRing<C>& r) {
  const auto quint = build_X(r.q());
  const int d = r.trunc();
  const auto lhs = qexp(torus_to_series(quint.at(1), d)) * qexp(torus_to_series(quint.at(5), d));
  const auto rhs = qexp(q_inverse_series(quint.at(2), d)) * qexp(q_inverse_series(quint.at(3), d)) *
                   qexp(q_inverse_series(quint.at(4), d));
  return {lhs, rhs};
}

/// l(Y_5) l(Y_1) against l(qY_4^-1) l(qY_3^-1) l(qY_2^-1).
template <Coefficient C>
Sides<C> section4_y_sides(const SeriesRing<C>& r) {
  const auto quint = build_Y(r.q());
  const int d = r.trunc();
  const auto lhs = qexp(torus_to_series(quint.at(5), d)) * qexp(torus_to_series(quint.at(1), d));
  const auto rhs = qexp(q_inverse_series(quint.at(4), d)) * qexp(q_inverse_series(quint.at(3), d)) *
                   qexp(q_inverse_series(quint.at(2), d));
  return {lhs, rhs};
}

/// Stable identity names accepted by run_check and the CLI.
const std::vector<std::string>& series_identity_names();
/// Exact quantum-torus checks bundled into run_all.
const std::vector<std::string>& torus_check_names();
/// series_identity_names() followed by torus_check_names().
std::vector<std::string> all_check_names();

VerificationReport verify_qbinomial_theorem(int n_max, const QMode& mode);
VerificationReport verify_schutzenberger(int degree, const QMode& mode);
VerificationReport verify_functional_equation(int degree, const QMode& mode);
VerificationReport verify_conjugations(int degree, const QMode& mode);
VerificationReport verify_fv_relation(int degree, const QMode& mode);
VerificationReport verify_pentagon(int degree, const QMode& mode);
VerificationReport verify_five_factor(int degree, const QMode& mode);
VerificationReport verify_section4_x_form(int degree, const QMode& mode);
VerificationReport verify_section4_y_form(int degree, const QMode& mode);
/// Both section-4 reports, x form first.
std::vector<VerificationReport> verify_section4_forms(int degree, const QMode& mode);

/// Runs one named check. Throws std::invalid_argument for unknown names and
/// InadmissibleSpecialization for a q0 rejected by QMode::validate.
VerificationReport run_check(std::string_view name, int degree, const QMode& mode);

/// Every series identity plus the torus checks, run concurrently when
/// `parallel` is set; the result is sorted by identity name.
std::vector<VerificationReport> run_all(int degree, const QMode& mode, bool parallel = true);

/// Runs the given names (each must be known), sorted by identity name.
std::vector<VerificationReport> run_selected(const std::vector<std::string>& names, int degree, const QMode& mode,
                                             bool parallel = true);

}  // namespace qpentagon
