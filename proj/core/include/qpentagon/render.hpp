#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qpentagon::detail {

struct RenderedTerm {
  int m;
  int n;
  std::string coefficient;
};

inline std::string render_power(char var, int e) {
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

inline bool is_plain_coefficient(const std::string& s) {
  if (s.find('/') != std::string::npos) return false;
  return s.find_first_of("+-", 1) == std::string::npos;
}

/// "1 + x + y + x^2 + (1+q)*x*y + y^2": total degree ascending, then x-power
/// descending. Works for negative exponents ("x^-1*y^-1").
inline std::string render_terms(std::vector<RenderedTerm> terms) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const RenderedTerm& a, const RenderedTerm& b) {
    if (a.m + a.n != b.m + b.n) return a.m + a.n < b.m + b.n;
    return a.m > b.m;
  });
  std::string out;
  for (const auto& t : terms) {
    std::string mono;
    if (t.m != 0) mono = render_power('x', t.m);
    if (t.n != 0) mono += (mono.empty() ? "" : "*") + render_power('y', t.n);
    std::string term;
    if (mono.empty()) {
      term = is_plain_coefficient(t.coefficient) ? t.coefficient : "(" + t.coefficient + ")";
    } else if (t.coefficient == "1") {
      term = mono;
    } else if (t.coefficient == "-1") {
      term = "-" + mono;
    } else if (is_plain_coefficient(t.coefficient)) {
      term = t.coefficient + "*" + mono;
    } else {
      term = "(" + t.coefficient + ")*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace qpentagon::detail
