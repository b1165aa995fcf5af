#include "qpentagon/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <stdexcept>

namespace qpentagon {
namespace {

template <Coefficient C>
std::optional<Witness> to_witness(const std::optional<SeriesWitness<C>>& w) {
  if (!w) return std::nullopt;
  return Witness{w->m, w->n, to_string(w->lhs), to_string(w->rhs)};
}

template <Coefficient C>
std::optional<Witness> mismatch(const Sides<C>& sides) {
  return to_witness(nc_eq(sides.lhs, sides.rhs).witness);
}

template <Coefficient C, std::size_t N>
std::optional<Witness> first_mismatch(const std::array<Sides<C>, N>& all) {
  for (const auto& sides : all) {
    if (auto w = mismatch(sides)) return w;
  }
  return std::nullopt;
}

/// Runs `body` with a SeriesRing in the field selected by `mode`.
template <class Body>
std::optional<Witness> in_mode(int degree, const QMode& mode, Body&& body) {
  if (degree < 0) throw std::invalid_argument("verification degree must be nonnegative");
  mode.validate(degree);
  if (mode.is_symbolic()) return body(SeriesRing<QRat>(degree, QRat::q()));
  return body(SeriesRing<BigRational>(degree, mode.q0()));
}

template <class Body>
VerificationReport timed(std::string name, int degree, const QMode& mode, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<Witness> witness = in_mode(degree, mode, std::forward<Body>(body));
  const auto stop = std::chrono::steady_clock::now();
  VerificationReport r;
  r.identity = std::move(name);
  r.degree = degree;
  r.q_mode = mode.to_string();
  r.status = witness ? Status::fails : Status::holds;
  r.witness = std::move(witness);
  r.elapsed_millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return r;
}

template <Coefficient C>
std::optional<Witness> qbinomial_theorem_mismatch(const SeriesRing<C>& r) {
  const int n_max = r.trunc();
  const auto triangle = qpascal_triangle(n_max, r.q());
  const auto sum = r.x() + r.y();
  for (int n = 0; n <= n_max; ++n) {
    auto from_pascal = r.zero();
    auto from_quotient = r.zero();
    for (int k = 0; k <= n; ++k) {
      from_pascal.set(Exponent{n - k, k}, triangle[n][k]);
      from_quotient.set(Exponent{n - k, k}, lift(qbinomial(n, k), r.q()));
    }
    if (auto w = mismatch(Sides<C>{nc_pow(sum, n), from_pascal})) return w;
    if (auto w = mismatch(Sides<C>{from_pascal, from_quotient})) return w;
  }
  return std::nullopt;
}

template <Coefficient C>
std::optional<Witness> cycle_witness(const CycleCheck<C>& check) {
  if (check.holds) return std::nullopt;
  if (check.witness) return to_witness(check.witness);
  return Witness{0, 0, "?", "?"};
}

using Runner = std::function<VerificationReport(int, const QMode&)>;

VerificationReport torus_report(std::string name, int degree, const QMode& mode) {
  return timed(name, degree, mode, [&name](const auto& r) {
    const auto& q = r.q();
    if (name == "torus_x_commutation") return cycle_witness(check_commutation(build_X(q)));
    if (name == "torus_y_commutation") return cycle_witness(check_commutation(build_Y(q)));
    if (name == "torus_qx_system") return cycle_witness(check_qx_system(build_X(q)));
    if (name == "torus_qy_system") return cycle_witness(check_qy_system(build_Y(q)));
    if (name == "torus_period4") return cycle_witness(check_periodic_system(period4_quadruple(q), PeriodicRule::product_q));
    return cycle_witness(check_periodic_system(period6_sextuple(q), PeriodicRule::product_negmid));
  });
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = [] {
    std::vector<std::pair<std::string, Runner>> t = {
        {"qbinomial_theorem", verify_qbinomial_theorem},
        {"schutzenberger", verify_schutzenberger},
        {"functional_eq", verify_functional_equation},
        {"conjugations", verify_conjugations},
        {"fv", verify_fv_relation},
        {"pentagon", verify_pentagon},
        {"five_factor", verify_five_factor},
        {"section4_x_form", verify_section4_x_form},
        {"section4_y_form", verify_section4_y_form},
    };
    for (const auto& name : torus_check_names()) {
      t.emplace_back(name, [name](int d, const QMode& m) { return torus_report(name, d, m); });
    }
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& series_identity_names() {
  static const std::vector<std::string> names = {"qbinomial_theorem", "schutzenberger", "functional_eq",
                                                 "conjugations",      "fv",             "pentagon",
                                                 "five_factor",       "section4_x_form", "section4_y_form"};
  return names;
}

const std::vector<std::string>& torus_check_names() {
  static const std::vector<std::string> names = {"torus_x_commutation", "torus_y_commutation", "torus_qx_system",
                                                 "torus_qy_system",     "torus_period4",       "torus_period6"};
  return names;
}

std::vector<std::string> all_check_names() {
  std::vector<std::string> out = series_identity_names();
  out.insert(out.end(), torus_check_names().begin(), torus_check_names().end());
  return out;
}

VerificationReport verify_qbinomial_theorem(int n_max, const QMode& mode) {
  return timed("qbinomial_theorem", n_max, mode, [](const auto& r) { return qbinomial_theorem_mismatch(r); });
}

VerificationReport verify_schutzenberger(int degree, const QMode& mode) {
  return timed("schutzenberger", degree, mode, [](const auto& r) { return mismatch(schutzenberger_sides(r)); });
}

VerificationReport verify_functional_equation(int degree, const QMode& mode) {
  return timed("functional_eq", degree, mode, [](const auto& r) { return mismatch(functional_equation_sides(r)); });
}

VerificationReport verify_conjugations(int degree, const QMode& mode) {
  return timed("conjugations", degree, mode, [](const auto& r) { return first_mismatch(conjugation_sides(r)); });
}

VerificationReport verify_fv_relation(int degree, const QMode& mode) {
  return timed("fv", degree, mode, [](const auto& r) { return mismatch(fv_sides(r)); });
}

VerificationReport verify_pentagon(int degree, const QMode& mode) {
  return timed("pentagon", degree, mode, [](const auto& r) { return mismatch(pentagon_sides(r)); });
}

VerificationReport verify_five_factor(int degree, const QMode& mode) {
  return timed("five_factor", degree, mode, [](const auto& r) { return mismatch(five_factor_sides(r)); });
}

VerificationReport verify_section4_x_form(int degree, const QMode& mode) {
  return timed("section4_x_form", degree, mode, [](const auto& r) -> std::optional<Witness> {
    if (auto w = first_mismatch(x_form_reductions(r))) return w;
    return mismatch(section4_x_sides(r));
  });
}

VerificationReport verify_section4_y_form(int degree, const QMode& mode) {
  return timed("section4_y_form", degree, mode, [](const auto& r) -> std::optional<Witness> {
    if (auto w = first_mismatch(y_form_reductions(r))) return w;
    return mismatch(section4_y_sides(r));
  });
}

std::vector<VerificationReport> verify_section4_forms(int degree, const QMode& mode) {
  return {verify_section4_x_form(degree, mode), verify_section4_y_form(degree, mode)};
}

VerificationReport run_check(std::string_view name, int degree, const QMode& mode) {
  for (const auto& [known, runner] : registry()) {
    if (known == name) return runner(degree, mode);
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::vector<VerificationReport> run_selected(const std::vector<std::string>& names, int degree, const QMode& mode,
                                             bool parallel) {
  if (degree < 0) throw std::invalid_argument("verification degree must be nonnegative");
  const auto& table = registry();
  for (const auto& name : names) {
    if (std::none_of(table.begin(), table.end(), [&](const auto& e) { return e.first == name; })) {
      throw std::invalid_argument("unknown identity '" + name + "'");
    }
  }
  // Reject an inadmissible q0 before any work starts.
  mode.validate(degree);

  std::vector<VerificationReport> reports;
  reports.reserve(names.size());
  if (parallel) {
    std::vector<std::future<VerificationReport>> pending;
    pending.reserve(names.size());
    for (const auto& name : names) {
      pending.push_back(std::async(std::launch::async, [&name, degree, &mode] { return run_check(name, degree, mode); }));
    }
    for (auto& f : pending) reports.push_back(f.get());
  } else {
    for (const auto& name : names) reports.push_back(run_check(name, degree, mode));
  }
  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.identity < b.identity; });
  return reports;
}

std::vector<VerificationReport> run_all(int degree, const QMode& mode, bool parallel) {
  return run_selected(all_check_names(), degree, mode, parallel);
}

}  // namespace qpentagon
