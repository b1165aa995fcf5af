#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "expr.hpp"
#include "qpentagon/dilog.hpp"
#include "qpentagon/identities.hpp"

namespace qpentagon::cli {
namespace {

void print_report(const VerificationReport& r, bool json, std::ostream& out) {
  out << (json ? to_json(r) : to_text(r)) << '\n';
}

template <Coefficient C>
std::optional<Witness> witness_of(const std::optional<SeriesWitness<C>>& w) {
  if (!w) return std::nullopt;
  return Witness{w->m, w->n, to_string(w->lhs), to_string(w->rhs)};
}

template <Coefficient C>
std::optional<Witness> compare_expressions(const Expr& lhs, const Expr& rhs, int degree, const C& q, bool torus) {
  if (torus) {
    const auto a = eval_torus(lhs, q);
    const auto b = eval_torus(rhs, q);
    const auto diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    const Exponent e = diff.terms().begin()->first;
    return Witness{e.m, e.n, to_string(a.coefficient(e.m, e.n)), to_string(b.coefficient(e.m, e.n))};
  }
  const SeriesRing<C> ring(degree, q);
  return witness_of(nc_eq(eval_series(lhs, ring), eval_series(rhs, ring)).witness);
}

template <Coefficient C>
std::string evaluate_to_string(const Expr& e, int degree, const C& q, bool torus) {
  if (torus) return to_string(eval_torus(e, q));
  return to_string(eval_series(e, SeriesRing<C>(degree, q)));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<CatalogEntry>& identity_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"qbinomial_theorem", "(x+y)^3", "x^3 + (1+q+q^2)*x^2*y + (1+q+q^2)*x*y^2 + y^3"},
      {"schutzenberger", "l(x+y)", "l(x)*l(y)"},
      {"functional_eq", "l(q*x)", "(1-x)*l(x)"},
      {"conjugations", "l(y)*x*inv(l(y))", "x*(1-y)"},
      {"conjugations", "inv(l(y))*x*l(y)", "x*inv(1-y)"},
      {"conjugations", "l(x)*y*inv(l(x))", "inv(1-x)*y"},
      {"conjugations", "inv(l(y))*l(x)*x*y*inv(l(x))*l(y)", "x*inv(1-x-y)*y"},
      {"fv", "l(y)*l(x)", "l(x+y-x*y)"},
      {"pentagon", "l(y)*l(x)", "l(x)*l(-(x*y))*l(y)"},
      {"five_factor", "l(x)*l(y)", "l(inv(1-x)*y)*l(-(x*inv(1-x-y)*y))*l(x*inv(1-y))"},
  };
  return catalog;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const int degree = cfg.effective_degree();
  std::vector<std::string> names = cfg.identities;
  if (cfg.all && !names.empty()) {
    err << "error: give identity names or --all, not both\n";
    return kExitUsage;
  }
  if (names.empty()) names = all_check_names();
  try {
    const auto reports = run_selected(names, degree, cfg.q_mode);
    for (const auto& r : reports) print_report(r, cfg.json, out);
    return all_hold(reports) ? kExitHolds : kExitFails;
  } catch (const InadmissibleSpecialization& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nknown identities:";
    for (const auto& n : all_check_names()) err << ' ' << n;
    err << '\n';
    return kExitUsage;
  }
}

int cmd_check_equal(std::string_view lhs, std::string_view rhs, const CliConfig& cfg, std::ostream& out,
                    std::ostream& err) {
  const int degree = cfg.effective_degree();
  try {
    cfg.q_mode.validate(degree);
    const ExprPtr a = parse_expr(lhs);
    const ExprPtr b = parse_expr(rhs);
    const auto start = std::chrono::steady_clock::now();
    std::optional<Witness> witness =
        cfg.q_mode.is_symbolic() ? compare_expressions(*a, *b, degree, QRat::q(), cfg.torus)
                                 : compare_expressions(*a, *b, degree, cfg.q_mode.q0(), cfg.torus);
    const auto stop = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity = "check_equal";
    r.degree = degree;
    r.q_mode = cfg.q_mode.to_string();
    r.status = witness ? Status::fails : Status::holds;
    r.witness = std::move(witness);
    r.elapsed_millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    print_report(r, cfg.json, out);
    return r.holds() ? kExitHolds : kExitFails;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InadmissibleSpecialization& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int cmd_eval(std::string_view expr, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const int degree = cfg.effective_degree();
  try {
    cfg.q_mode.validate(degree);
    const ExprPtr e = parse_expr(expr);
    const std::string value = cfg.q_mode.is_symbolic() ? evaluate_to_string(*e, degree, QRat::q(), cfg.torus)
                                                       : evaluate_to_string(*e, degree, cfg.q_mode.q0(), cfg.torus);
    if (cfg.json) {
      nlohmann::ordered_json j;
      j["expr"] = format_expr(*e);
      j["degree"] = degree;
      j["q_mode"] = cfg.q_mode.to_string();
      j["torus"] = cfg.torus;
      j["value"] = value;
      out << j.dump() << '\n';
    } else {
      out << value << '\n';
    }
    return kExitHolds;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InadmissibleSpecialization& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int cmd_dilog(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.tolerance > 0.0) || cfg.grid < 1) {
    err << "error: need --tol > 0 and --grid >= 1\n";
    return kExitUsage;
  }
  const auto rows = dilog::defect_grid(cfg.grid);
  double worst = 0.0;
  out << "x,y,defect,y_form_defect,max_y_system_residual\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.defect) << ','
        << format_double(r.y_form_defect) << ',' << format_double(r.max_y_system_residual) << '\n';
    worst = std::max({worst, std::abs(r.defect), std::abs(r.y_form_defect), r.max_y_system_residual});
  }
  err << rows.size() << " grid points, max |defect| = " << format_double(worst) << ", tolerance "
      << format_double(cfg.tolerance) << '\n';
  return worst <= cfg.tolerance ? kExitHolds : kExitFails;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const int max_degree = cfg.degree.value_or(8);
  if (max_degree < 0) {
    err << "error: degree must be nonnegative\n";
    return kExitUsage;
  }
  const QMode specialized = cfg.q_mode.is_symbolic() ? QMode::specialized(BigRational(2, 5)) : cfg.q_mode;
  std::vector<int> degrees;
  for (int d = 4; d <= max_degree; d += 2) degrees.push_back(d);
  if (degrees.empty()) degrees.push_back(max_degree);

  try {
    for (const int d : degrees) specialized.validate(d);
  } catch (const InadmissibleSpecialization& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool every_check_holds = true;
  if (!cfg.json) {
    out << std::left << std::setw(22) << "identity" << std::right << std::setw(8) << "degree" << std::setw(11)
        << "q_mode" << std::setw(12) << "millis" << '\n';
  }
  for (const QMode& mode : {QMode::symbolic(), specialized}) {
    for (const int d : degrees) {
      const auto reports = run_all(d, mode, /*parallel=*/false);
      std::int64_t total = 0;
      for (const auto& r : reports) {
        every_check_holds = every_check_holds && r.holds();
        total += r.elapsed_millis;
        if (cfg.json) {
          nlohmann::ordered_json j;
          j["identity"] = r.identity;
          j["degree"] = d;
          j["q_mode"] = r.q_mode;
          j["status"] = r.holds() ? "holds" : "fails";
          j["elapsed_millis"] = r.elapsed_millis;
          out << j.dump() << '\n';
        } else {
          out << std::left << std::setw(22) << r.identity << std::right << std::setw(8) << d << std::setw(11)
              << r.q_mode << std::setw(12) << r.elapsed_millis << '\n';
        }
      }
      if (!cfg.json) {
        out << std::left << std::setw(22) << "TOTAL" << std::right << std::setw(8) << d << std::setw(11)
            << mode.to_string() << std::setw(12) << total << '\n';
      }
    }
  }
  return every_check_holds ? kExitHolds : kExitFails;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantum-dilogarithm identities in q-commuting variables", "qpentagon"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string q_text = "symbolic";
  int degree = -1;
  std::string lhs, rhs, expr_text;

  const auto add_mode_flags = [&](CLI::App* sub) {
    sub->add_option("--degree", degree, "Truncation degree (default 8 symbolic, 16 specialized)");
    sub->add_option("--q", q_text, "'symbolic' or an exact rational p/r to substitute for q");
    sub->add_flag("--json", cfg.json, "Newline-delimited JSON output");
  };

  CLI::App* verify = app.add_subcommand("verify", "Verify named identities");
  verify->add_option("identities", cfg.identities, "Identity names (default: all)");
  verify->add_flag("--all", cfg.all, "Verify every identity and torus check");
  add_mode_flags(verify);

  CLI::App* check = app.add_subcommand("check-equal", "Compare two expressions coefficient by coefficient");
  check->add_option("lhs", lhs, "Left-hand side")->required();
  check->add_option("rhs", rhs, "Right-hand side")->required();
  check->add_flag("--torus", cfg.torus, "Evaluate as exact Laurent polynomials");
  add_mode_flags(check);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr_text, "Expression")->required();
  eval->add_flag("--torus", cfg.torus, "Evaluate as an exact Laurent polynomial");
  add_mode_flags(eval);

  CLI::App* dilog_cmd = app.add_subcommand("dilog", "Classical five-term relation defect table (CSV)");
  dilog_cmd->add_option("--grid", cfg.grid, "Grid points per axis")->check(CLI::PositiveNumber);
  dilog_cmd->add_option("--tol", cfg.tolerance, "Largest acceptable |defect|")->check(CLI::PositiveNumber);

  CLI::App* bench = app.add_subcommand("bench", "Time the verification suite at degrees 4, 6, ..., --degree");
  add_mode_flags(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    cfg.q_mode = QMode::parse(q_text);
  } catch (const std::invalid_argument& e) {
    err << "error: --q: " << e.what() << '\n';
    return kExitUsage;
  }
  if (degree != -1) {
    if (degree < 0) {
      err << "error: --degree must be nonnegative\n";
      return kExitUsage;
    }
    cfg.degree = degree;
  }

  if (verify->parsed()) return cmd_verify(cfg, out, err);
  if (check->parsed()) return cmd_check_equal(lhs, rhs, cfg, out, err);
  if (eval->parsed()) return cmd_eval(expr_text, cfg, out, err);
  if (dilog_cmd->parsed()) return cmd_dilog(cfg, out, err);
  if (bench->parsed()) return cmd_bench(cfg, out, err);
  return kExitUsage;
}

}  // namespace qpentagon::cli
