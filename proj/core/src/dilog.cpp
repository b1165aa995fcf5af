#include "qpentagon/dilog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qpentagon::dilog {
namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Power series, |z| <= 1/2: terms shrink at least like 2^-k.
double li2_series(double z) {
  double sum = 0.0;
  double zk = z;
  for (int k = 1; k < 200; ++k) {
    const double term = zk / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    zk *= z;
  }
  return sum;
}

void require_triangle(double x, double y, const char* who) {
  if (!(x > 0.0 && y > 0.0 && x + y < 1.0)) {
    throw std::domain_error(std::string(who) + ": need x, y > 0 and x + y < 1");
  }
}

}  // namespace

double li2(double z) {
  if (!std::isfinite(z)) throw std::domain_error("li2: non-finite argument");
  if (z > 1.0) throw std::domain_error("li2: z > 1 lies on the complex branch");
  if (z == 1.0) return kPi2Over6;
  if (z >= -0.5 && z <= 0.5) return li2_series(z);
  if (z > 0.5) {
    // Reflection Li2(z) + Li2(1-z) = pi^2/6 - log z log(1-z).
    return kPi2Over6 - std::log(z) * std::log1p(-z) - li2_series(1.0 - z);
  }
  // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2, with z/(z-1) in (1/3, 1).
  const double l = std::log1p(-z);
  return -li2(z / (z - 1.0)) - 0.5 * l * l;
}

double rogers_L(double z) {
  if (!std::isfinite(z)) throw std::domain_error("rogers_L: non-finite argument");
  if (z > 1.0) throw std::domain_error("rogers_L: z > 1");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return kPi2Over6;
  return li2(z) + 0.5 * std::log(std::abs(z)) * std::log1p(-z);
}

double curly_L(double z) {
  if (z == 0.0 || z == 1.0) throw std::domain_error("curly_L: z must differ from 0 and 1");
  const double w = z / (z - 1.0);
  if (!(w < 1.0)) throw std::domain_error("curly_L: z/(z-1) >= 1");
  return rogers_L(w);
}

double five_term_defect(double x, double y) {
  require_triangle(x, y, "five_term_defect");
  const double lhs = curly_L(x) + curly_L(y);
  const double rhs = curly_L(y / (1.0 - x)) + curly_L(-x * y / (1.0 - x - y)) + curly_L(x / (1.0 - y));
  return lhs - rhs;
}

ClassicalQuintuple classical_y_quintuple(double x, double y) {
  require_triangle(x, y, "classical_y_quintuple");
  return {{y, (1.0 - y) / x, (1.0 - x - y) / (-x * y), (1.0 - x) / y, x}};
}

double max_y_system_residual(const ClassicalQuintuple& q) {
  double worst = 0.0;
  for (int t = 1; t <= 5; ++t) worst = std::max(worst, std::abs(q.at(t - 1) * q.at(t + 1) - (1.0 - q.at(t))));
  return worst;
}

bool check_classical_y_system(const ClassicalQuintuple& q, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_classical_y_system: tolerance must be positive");
  return max_y_system_residual(q) <= tol;
}

double five_term_y_form_defect(double x, double y) {
  const ClassicalQuintuple q = classical_y_quintuple(x, y);
  return curly_L(q.at(5)) + curly_L(q.at(1)) - (curly_L(1.0 / q.at(4)) + curly_L(1.0 / q.at(3)) + curly_L(1.0 / q.at(2)));
}

std::vector<DefectRow> defect_grid(int n) {
  if (n < 1) throw std::invalid_argument("defect_grid: need at least one grid point per axis");
  constexpr double lo = 0.05;
  constexpr double hi = 0.9;
  constexpr double diagonal = 0.95;
  std::vector<DefectRow> rows;
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = n == 1 ? lo : lo + (hi - lo) * j / (n - 1);
      if (x + y > diagonal + 1e-12) continue;
      rows.push_back({x, y, five_term_defect(x, y), five_term_y_form_defect(x, y),
                      max_y_system_residual(classical_y_quintuple(x, y))});
    }
  }
  return rows;
}

}  // namespace qpentagon::dilog
