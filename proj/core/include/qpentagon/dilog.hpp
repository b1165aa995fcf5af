#pragma once

#include <array>
#include <vector>

// Real dilogarithm, Rogers L and the transformed L(1/(1-1/z)) used by the
// classical five-term relation and its Y-system.

namespace qpentagon::dilog {

/// Li2(z) = sum z^k / k^2 continued to z <= 1. Throws std::domain_error for
/// z > 1 or non-finite z.
double li2(double z);

/// Rogers dilogarithm Li2(z) + log|z| log(1-z) / 2 for z < 1, with L(0) = 0 and
/// L(1) = pi^2/6. Throws std::domain_error for z > 1.
double rogers_L(double z);

/// rogers_L(z / (z - 1)), the simplified form of L(1/(1-1/z)). Throws
/// std::domain_error for z in {0, 1} or when z/(z-1) >= 1.
double curly_L(double z);

/// LHS - RHS of curly_L(x) + curly_L(y) = curly_L(y/(1-x)) +
/// curly_L(-xy/(1-x-y)) + curly_L(x/(1-y)) on x, y > 0, x + y < 1.
double five_term_defect(double x, double y);

struct ClassicalQuintuple {
  std::array<double, 5> entries;
  /// 1-based cyclic index t.
  double at(int t) const { return entries[static_cast<std::size_t>(((t - 1) % 5 + 5) % 5)]; }
};

/// Y1 = y, Y2 = (1-y)/x, Y3 = (1-x-y)/(-xy), Y4 = (1-x)/y, Y5 = x.
ClassicalQuintuple classical_y_quintuple(double x, double y);

/// max_t |Y_{t-1} Y_{t+1} - (1 - Y_t)|.
double max_y_system_residual(const ClassicalQuintuple& q);

/// True iff every residual of Y_{t-1} Y_{t+1} = 1 - Y_t is within tol (> 0).
bool check_classical_y_system(const ClassicalQuintuple& q, double tol);

/// LHS - RHS of curly_L(Y5) + curly_L(Y1) = curly_L(1/Y4) + curly_L(1/Y3) +
/// curly_L(1/Y2).
double five_term_y_form_defect(double x, double y);

/// One row of the classical defect table.
struct DefectRow {
  double x;
  double y;
  double defect;
  double y_form_defect;
  double max_y_system_residual;
};

/// Evaluates the n x n grid x, y in {0.05 + i (0.85/(n-1))} restricted to
/// x + y <= 0.95. n = 1 uses the single point (0.05, 0.05).
std::vector<DefectRow> defect_grid(int n);

}  // namespace qpentagon::dilog
