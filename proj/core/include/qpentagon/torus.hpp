#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpentagon/coefficient.hpp"
#include "qpentagon/errors.hpp"
#include "qpentagon/fault.hpp"
#include "qpentagon/ncseries.hpp"
#include "qpentagon/render.hpp"

namespace qpentagon {

/// Finite Laurent sum c_{m,n} x^m y^n (m, n any integers) in the quantum
/// torus yx = qxy, normal-ordered with x-powers on the left. No truncation.
template <Coefficient C>
class TorusElem {
 public:
  using Terms = std::map<Exponent, C>;

  explicit TorusElem(C q) : q_(std::move(q)) {}

  static TorusElem monomial(const C& q, const C& c, int m, int n) {
    TorusElem t(q);
    t.accumulate(Exponent{m, n}, c);
    return t;
  }
  static TorusElem constant(const C& q, const C& c) { return monomial(q, c, 0, 0); }
  static TorusElem x(const C& q) { return monomial(q, C(1L), 1, 0); }
  static TorusElem y(const C& q) { return monomial(q, C(1L), 0, 1); }

  const C& q() const { return q_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  C coefficient(int m, int n) const {
    auto it = terms_.find(Exponent{m, n});
    return it == terms_.end() ? C(0L) : it->second;
  }

  void accumulate(Exponent e, const C& c) {
    if (::qpentagon::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (::qpentagon::is_zero(it->second)) terms_.erase(it);
    }
  }

  TorusElem operator-() const {
    TorusElem r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  TorusElem scaled(const C& s) const {
    TorusElem r(q_);
    for (const auto& [e, c] : terms_) r.accumulate(e, C(c * s));
    return r;
  }

  friend bool operator==(const TorusElem&, const TorusElem&) = default;

 private:
  C q_;
  Terms terms_;
};

template <Coefficient C>
TorusElem<C> operator+(const TorusElem<C>& a, const TorusElem<C>& b) {
  TorusElem<C> r = a;
  for (const auto& [e, c] : b.terms()) r.accumulate(e, c);
  return r;
}

template <Coefficient C>
TorusElem<C> operator-(const TorusElem<C>& a, const TorusElem<C>& b) {
  TorusElem<C> r = a;
  for (const auto& [e, c] : b.terms()) r.accumulate(e, C(-c));
  return r;
}

/// Exact normal-ordered product using y^n x^m = q^(mn) x^m y^n for all
/// integers m, n.
template <Coefficient C>
TorusElem<C> torus_mul(const TorusElem<C>& a, const TorusElem<C>& b) {
  if (!(a.q() == b.q())) throw std::invalid_argument("torus_mul: operands use different q");
  const bool twist_bug = fault::active() == fault::Mutation::twist_off_by_one;
  TorusElem<C> r(a.q());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      int twist = ea.n * eb.m;
      if (twist_bug && twist > 0) ++twist;
      C term = ca * cb;
      if (twist != 0) term = term * power(a.q(), twist);
      r.accumulate(Exponent{ea.m + eb.m, ea.n + eb.n}, term);
    }
  }
  return r;
}

template <Coefficient C>
TorusElem<C> operator*(const TorusElem<C>& a, const TorusElem<C>& b) { return torus_mul(a, b); }

/// Two-sided inverse of a single term c x^m y^n: q^(mn) c^-1 x^-m y^-n.
/// Throws NotInvertible for anything that is not a nonzero monomial.
template <Coefficient C>
TorusElem<C> torus_monomial_inv(const TorusElem<C>& a) {
  if (!a.is_monomial()) {
    throw NotInvertible("torus_monomial_inv: element with " + std::to_string(a.terms().size()) +
                        " terms is not a unit");
  }
  const auto& [e, c] = *a.terms().begin();
  return TorusElem<C>::monomial(a.q(), C(power(a.q(), e.m * e.n) / c), -e.m, -e.n);
}

template <Coefficient C>
std::string to_string(const TorusElem<C>& t) {
  std::vector<detail::RenderedTerm> terms;
  for (const auto& [e, c] : t.terms()) terms.push_back({e.m, e.n, to_string(c)});
  return detail::render_terms(std::move(terms));
}

/// Embeds an element with nonnegative exponents into the series algebra,
/// dropping terms above trunc. Throws std::domain_error on negative exponents.
template <Coefficient C>
NCSeries<C> torus_to_series(const TorusElem<C>& t, int trunc) {
  NCSeries<C> s(trunc, t.q());
  for (const auto& [e, c] : t.terms()) {
    if (e.m < 0 || e.n < 0) {
      throw std::domain_error("torus_to_series: negative exponent in " + to_string(t));
    }
    s.set(e, c);
  }
  return s;
}

/// Rewrites q * t^-1 as a truncated normal-ordered series. t is factored as
/// M * S with M its term at the lowest corner (min m, min n); S = M^-1 t then
/// has nonnegative exponents and constant term 1, and q t^-1 = q S^-1 M^-1.
/// Throws std::domain_error when t has no such corner term, when M^-1 has
/// negative exponents, or when the result has a nonzero constant term.
template <Coefficient C>
NCSeries<C> q_inverse_series(const TorusElem<C>& t, int trunc) {
  if (t.is_zero()) throw NotInvertible("q_inverse_series: zero element");
  int min_m = t.terms().begin()->first.m;
  int min_n = t.terms().begin()->first.n;
  for (const auto& [e, c] : t.terms()) {
    min_m = std::min(min_m, e.m);
    min_n = std::min(min_n, e.n);
  }
  const C corner = t.coefficient(min_m, min_n);
  if (is_zero(corner)) {
    throw std::domain_error("q_inverse_series: " + to_string(t) + " has no lowest-corner term");
  }
  if (min_m > 0 || min_n > 0) {
    throw std::domain_error("q_inverse_series: inverse of " + to_string(t) + " has negative exponents");
  }
  const TorusElem<C> lead = TorusElem<C>::monomial(t.q(), corner, min_m, min_n);
  const TorusElem<C> lead_inv = torus_monomial_inv(lead);
  const NCSeries<C> rest = torus_to_series(torus_mul(lead_inv, t), trunc);
  NCSeries<C> result = nc_mul(nc_inv(rest), torus_to_series(lead_inv, trunc)).scaled(t.q());
  if (!is_zero(result.constant_term())) {
    throw std::domain_error("q_inverse_series: q*(" + to_string(t) + ")^-1 has a nonzero constant term");
  }
  return result;
}

/// Cyclic sequence indexed by t in Z/len Z with the 1-based labels X_1..X_len;
/// storage is 0-based, at(t) maps t to slot (t - 1) mod len.
template <Coefficient C>
class CyclicSequence {
 public:
  explicit CyclicSequence(std::vector<TorusElem<C>> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("CyclicSequence: empty");
  }
  int size() const { return static_cast<int>(entries_.size()); }
  const TorusElem<C>& at(int t) const {
    const int len = size();
    return entries_[static_cast<std::size_t>((((t - 1) % len) + len) % len)];
  }
  const std::vector<TorusElem<C>>& entries() const { return entries_; }

 private:
  std::vector<TorusElem<C>> entries_;
};

/// Cyclic sequence of exactly five entries.
template <Coefficient C>
class Quintuple : public CyclicSequence<C> {
 public:
  explicit Quintuple(std::array<TorusElem<C>, 5> entries)
      : CyclicSequence<C>(std::vector<TorusElem<C>>(entries.begin(), entries.end())) {}
};

/// {y, q x^-1, -q^2 x^-1 y^-1, q y^-1, x}.
template <Coefficient C>
Quintuple<C> build_X(const C& q) {
  using T = TorusElem<C>;
  return Quintuple<C>({T::y(q), T::monomial(q, q, -1, 0), T::monomial(q, C(-(q * q)), -1, -1),
                       T::monomial(q, q, 0, -1), T::x(q)});
}

/// {y, x^-1 (q - y), -q x^-1 (q - x - y) y^-1, (q - x) y^-1, x}, each entry
/// normal-ordered by torus_mul.
template <Coefficient C>
Quintuple<C> build_Y(const C& q) {
  using T = TorusElem<C>;
  const T x = T::x(q);
  const T y = T::y(q);
  const T qc = T::constant(q, q);
  const T x_inv = T::monomial(q, C(1L), -1, 0);
  const T y_inv = T::monomial(q, C(1L), 0, -1);
  T y2 = torus_mul(x_inv, qc - y);
  T y3 = torus_mul(torus_mul(x_inv.scaled(C(-q)), qc - x - y), y_inv);
  T y4 = torus_mul(qc - x, y_inv);
  return Quintuple<C>({y, std::move(y2), std::move(y3), std::move(y4), x});
}

template <Coefficient C>
struct CycleCheck {
  bool holds = true;
  /// 1-based labels t at which the relation fails, ascending.
  std::vector<int> failing;
  /// Coefficient mismatch at the first failing t.
  std::optional<SeriesWitness<C>> witness;

  std::optional<int> failing_index() const {
    return failing.empty() ? std::nullopt : std::optional<int>(failing.front());
  }
  explicit operator bool() const { return holds; }
};

namespace detail {

template <Coefficient C>
std::optional<SeriesWitness<C>> torus_difference(const TorusElem<C>& lhs, const TorusElem<C>& rhs) {
  const TorusElem<C> diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const Exponent e = diff.terms().begin()->first;
  return SeriesWitness<C>{e.m, e.n, lhs.coefficient(e.m, e.n), rhs.coefficient(e.m, e.n)};
}

template <Coefficient C, class Rhs>
CycleCheck<C> check_cycle(const CyclicSequence<C>& s, Rhs&& expected_for) {
  CycleCheck<C> out;
  for (int t = 1; t <= s.size(); ++t) {
    auto [lhs, rhs] = expected_for(t);
    if (auto w = torus_difference(lhs, rhs)) {
      if (out.holds) out.witness = w;
      out.holds = false;
      out.failing.push_back(t);
    }
  }
  return out;
}

}  // namespace detail

/// Q[t+1] Q[t] = q Q[t] Q[t+1] for every t.
template <Coefficient C>
CycleCheck<C> check_commutation(const CyclicSequence<C>& s) {
  return detail::check_cycle(s, [&](int t) {
    const auto& a = s.at(t);
    const auto& b = s.at(t + 1);
    return std::pair{torus_mul(b, a), torus_mul(a, b).scaled(a.q())};
  });
}

/// Q[t-1] Q[t+1] = q for t = 1, 5 and = -Q[t] for t = 2, 3, 4 (mod 5).
template <Coefficient C>
CycleCheck<C> check_qx_system(const Quintuple<C>& s) {
  return detail::check_cycle<C>(s, [&](int t) {
    const auto& mid = s.at(t);
    TorusElem<C> lhs = torus_mul(s.at(t - 1), s.at(t + 1));
    TorusElem<C> rhs = (t == 1 || t == 5) ? TorusElem<C>::constant(mid.q(), mid.q()) : -mid;
    return std::pair{std::move(lhs), std::move(rhs)};
  });
}

/// Q[t-1] Q[t+1] = q - Q[t] for every t.
template <Coefficient C>
CycleCheck<C> check_qy_system(const Quintuple<C>& s) {
  return detail::check_cycle<C>(s, [&](int t) {
    const auto& mid = s.at(t);
    return std::pair{torus_mul(s.at(t - 1), s.at(t + 1)), TorusElem<C>::constant(mid.q(), mid.q()) - mid};
  });
}

enum class PeriodicRule {
  product_q,       // S[t-1] S[t+1] = q
  product_negmid,  // S[t-1] S[t+1] = -S[t]
};

template <Coefficient C>
CycleCheck<C> check_periodic_system(const CyclicSequence<C>& s, PeriodicRule rule) {
  if (s.size() < 3) throw std::invalid_argument("check_periodic_system: need at least three entries");
  return detail::check_cycle(s, [&](int t) {
    const auto& mid = s.at(t);
    TorusElem<C> lhs = torus_mul(s.at(t - 1), s.at(t + 1));
    TorusElem<C> rhs = rule == PeriodicRule::product_q ? TorusElem<C>::constant(mid.q(), mid.q()) : -mid;
    return std::pair{std::move(lhs), std::move(rhs)};
  });
}

/// {X1, X2, X4, X5}.
template <Coefficient C>
CyclicSequence<C> period4_quadruple(const C& q) {
  const auto x = build_X(q);
  return CyclicSequence<C>({x.at(1), x.at(2), x.at(4), x.at(5)});
}

/// {X1, ..., X5, q X3^-1}; the last entry is computed, not written out.
template <Coefficient C>
CyclicSequence<C> period6_sextuple(const C& q) {
  const auto x = build_X(q);
  return CyclicSequence<C>({x.at(1), x.at(2), x.at(3), x.at(4), x.at(5), torus_monomial_inv(x.at(3)).scaled(q)});
}

}  // namespace qpentagon
