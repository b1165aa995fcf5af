#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpentagon/coefficient.hpp"
#include "qpentagon/errors.hpp"
#include "qpentagon/fault.hpp"
#include "qpentagon/qspecial.hpp"
#include "qpentagon/render.hpp"

namespace qpentagon {

/// Exponent pair of the normal-ordered monomial x^m y^n. Ordered
/// lexicographically by (m, n).
struct Exponent {
  int m = 0;
  int n = 0;
  auto operator<=>(const Exponent&) const = default;
  int total() const { return m + n; }
};

/// Truncated power series sum c_{m,n} x^m y^n in q-commuting x, y (yx = qxy),
/// kept in normal order (x-powers left). Terms with m + n > trunc are dropped
/// and zero coefficients are never stored. The value of q travels with the
/// series so the same code serves symbolic (QRat) and specialized
/// (BigRational) modes.
template <Coefficient C>
class NCSeries {
 public:
  using Terms = std::map<Exponent, C>;

  NCSeries(int trunc, C q) : trunc_(trunc), q_(std::move(q)) {
    if (trunc < 0) throw std::invalid_argument("NCSeries: negative truncation degree");
  }

  static NCSeries constant(int trunc, const C& q, const C& c) { return monomial(trunc, q, c, 0, 0); }
  static NCSeries one(int trunc, const C& q) { return constant(trunc, q, C(1L)); }
  static NCSeries x(int trunc, const C& q) { return monomial(trunc, q, C(1L), 1, 0); }
  static NCSeries y(int trunc, const C& q) { return monomial(trunc, q, C(1L), 0, 1); }
  static NCSeries monomial(int trunc, const C& q, const C& c, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("NCSeries: negative exponent");
    NCSeries s(trunc, q);
    s.set(Exponent{m, n}, c);
    return s;
  }

  int trunc() const { return trunc_; }
  const C& q() const { return q_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(int m, int n) const {
    auto it = terms_.find(Exponent{m, n});
    return it == terms_.end() ? C(0L) : it->second;
  }
  C constant_term() const { return coefficient(0, 0); }

  /// Adds c to the coefficient at e; ignored when e lies above trunc.
  void accumulate(Exponent e, const C& c) {
    if (e.total() > trunc_ || is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// Overwrites the coefficient at e; ignored when e lies above trunc.
  void set(Exponent e, const C& c) {
    if (e.total() > trunc_) return;
    if (is_zero_coeff(c)) {
      terms_.erase(e);
    } else {
      terms_.insert_or_assign(e, c);
    }
  }

  /// Same series with a lower (or equal) truncation degree.
  NCSeries truncated(int degree) const {
    if (degree > trunc_) throw TruncationMismatch("NCSeries::truncated: cannot raise precision");
    NCSeries r(degree, q_);
    for (const auto& [e, c] : terms_) {
      if (e.total() <= degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
  }

  /// Reinterprets the stored terms at a higher truncation degree. Only valid
  /// when the series is exact (e.g. a polynomial of low degree).
  NCSeries with_trunc(int degree) const {
    NCSeries r(degree, q_);
    for (const auto& [e, c] : terms_) r.set(e, c);
    return r;
  }

  NCSeries operator-() const {
    NCSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  NCSeries scaled(const C& s) const {
    NCSeries r(trunc_, q_);
    if (is_zero_coeff(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, C(c * s));
    return r;
  }

  friend bool operator==(const NCSeries&, const NCSeries&) = default;

 private:
  static bool is_zero_coeff(const C& c) { return ::qpentagon::is_zero(c); }

  int trunc_;
  C q_;
  Terms terms_;
};

namespace detail {

template <Coefficient C>
void require_compatible(const NCSeries<C>& a, const NCSeries<C>& b, const char* op) {
  if (a.trunc() != b.trunc()) {
    throw TruncationMismatch(std::string(op) + ": truncation degrees differ (" + std::to_string(a.trunc()) +
                             " vs " + std::to_string(b.trunc()) + ")");
  }
  if (!(a.q() == b.q())) throw std::invalid_argument(std::string(op) + ": operands use different q");
}

}  // namespace detail

template <Coefficient C>
NCSeries<C> nc_add(const NCSeries<C>& a, const NCSeries<C>& b) {
  detail::require_compatible(a, b, "nc_add");
  NCSeries<C> r = a;
  for (const auto& [e, c] : b.terms()) r.accumulate(e, c);
  return r;
}

template <Coefficient C>
NCSeries<C> nc_sub(const NCSeries<C>& a, const NCSeries<C>& b) {
  detail::require_compatible(a, b, "nc_sub");
  NCSeries<C> r = a;
  for (const auto& [e, c] : b.terms()) r.accumulate(e, C(-c));
  return r;
}

/// Normal-ordered product: (x^m1 y^n1)(x^m2 y^n2) = q^(n1 m2) x^(m1+m2) y^(n1+n2).
template <Coefficient C>
NCSeries<C> nc_mul(const NCSeries<C>& a, const NCSeries<C>& b) {
  detail::require_compatible(a, b, "nc_mul");
  const int d = a.trunc();
  NCSeries<C> r(d, a.q());
  if (a.is_zero() || b.is_zero()) return r;
  const bool twist_bug = fault::active() == fault::Mutation::twist_off_by_one;

  const std::size_t stride = static_cast<std::size_t>(d) + 1;
  std::vector<C> acc(stride * stride, C(0L));
  std::vector<char> touched(stride * stride, 0);
  std::vector<C> qpow{C(1L)};

  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.total() + eb.total() > d) continue;
      int twist = ea.n * eb.m;
      if (twist_bug && twist > 0) ++twist;
      while (static_cast<int>(qpow.size()) <= twist) qpow.push_back(C(qpow.back() * a.q()));
      C term = ca * cb;
      if (twist != 0) term = term * qpow[static_cast<std::size_t>(twist)];
      const std::size_t slot = static_cast<std::size_t>(ea.m + eb.m) * stride + static_cast<std::size_t>(ea.n + eb.n);
      if (touched[slot]) {
        acc[slot] = acc[slot] + term;
      } else {
        acc[slot] = std::move(term);
        touched[slot] = 1;
      }
    }
  }
  for (std::size_t slot = 0; slot < acc.size(); ++slot) {
    if (touched[slot]) {
      r.set(Exponent{static_cast<int>(slot / stride), static_cast<int>(slot % stride)}, acc[slot]);
    }
  }
  return r;
}

/// a^n by repeated squaring; a^0 = 1.
template <Coefficient C>
NCSeries<C> nc_pow(const NCSeries<C>& a, int n) {
  if (n < 0) throw std::invalid_argument("nc_pow: negative exponent (use nc_inv)");
  NCSeries<C> acc = NCSeries<C>::one(a.trunc(), a.q());
  NCSeries<C> base = a;
  while (n != 0) {
    if (n & 1) acc = nc_mul(acc, base);
    n >>= 1;
    if (n != 0) base = nc_mul(base, base);
  }
  return acc;
}

/// Two-sided inverse c0^-1 * sum_{k<=trunc} v^k where a = c0 (1 - v).
/// Throws NotInvertible when the constant term vanishes.
template <Coefficient C>
NCSeries<C> nc_inv(const NCSeries<C>& a) {
  const C c0 = a.constant_term();
  if (is_zero(c0)) throw NotInvertible("nc_inv: zero constant term");
  const C c0_inv = C(1L) / c0;
  const NCSeries<C> one = NCSeries<C>::one(a.trunc(), a.q());
  const NCSeries<C> v = nc_sub(one, a.scaled(c0_inv));
  NCSeries<C> b = one;
  for (int k = 1; k <= a.trunc(); ++k) b = nc_add(one, nc_mul(v, b));
  return b.scaled(c0_inv);
}

/// Simultaneous substitution x -> s x, y -> s y.
template <Coefficient C>
NCSeries<C> nc_scale_vars(const NCSeries<C>& a, const C& s) {
  NCSeries<C> r(a.trunc(), a.q());
  std::vector<C> spow{C(1L)};
  for (const auto& [e, c] : a.terms()) {
    while (static_cast<int>(spow.size()) <= e.total()) spow.push_back(C(spow.back() * s));
    r.set(e, C(c * spow[static_cast<std::size_t>(e.total())]));
  }
  return r;
}

/// q-exponential l(z) = sum_{n<=trunc} z^n / (q)_n for z with zero constant
/// term. Throws NonzeroConstantTerm otherwise, and InadmissibleSpecialization
/// when some (q)_n vanishes in the coefficient field.
template <Coefficient C>
NCSeries<C> qexp(const NCSeries<C>& z) {
  if (!is_zero(z.constant_term())) throw NonzeroConstantTerm("qexp: argument has a nonzero constant term");
  NCSeries<C> sum = NCSeries<C>::one(z.trunc(), z.q());
  NCSeries<C> power = sum;
  C poch(1L);
  C qn(1L);
  for (int n = 1; n <= z.trunc(); ++n) {
    power = nc_mul(power, z);
    if (power.is_zero()) break;
    qn = qn * z.q();
    poch = poch * (C(1L) - qn);
    if (is_zero(poch)) {
      throw InadmissibleSpecialization("qexp: (q)_" + std::to_string(n) + " vanishes at q = " + to_string(z.q()));
    }
    sum = nc_add(sum, power.scaled(C(C(1L) / poch)));
  }
  return sum;
}

/// First (lexicographically smallest) key at which two series differ.
template <Coefficient C>
struct SeriesWitness {
  int m;
  int n;
  C lhs;
  C rhs;
};

template <Coefficient C>
struct SeriesComparison {
  bool equal;
  std::optional<SeriesWitness<C>> witness;
  explicit operator bool() const { return equal; }
};

template <Coefficient C>
SeriesComparison<C> nc_eq(const NCSeries<C>& a, const NCSeries<C>& b) {
  detail::require_compatible(a, b, "nc_eq");
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      return {false, SeriesWitness<C>{ia->first.m, ia->first.n, ia->second, C(0L)}};
    }
    if (ia == ea || ib->first < ia->first) {
      return {false, SeriesWitness<C>{ib->first.m, ib->first.n, C(0L), ib->second}};
    }
    if (!(ia->second == ib->second)) {
      return {false, SeriesWitness<C>{ia->first.m, ia->first.n, ia->second, ib->second}};
    }
    ++ia;
    ++ib;
  }
  return {true, std::nullopt};
}

template <Coefficient C>
NCSeries<C> operator+(const NCSeries<C>& a, const NCSeries<C>& b) { return nc_add(a, b); }
template <Coefficient C>
NCSeries<C> operator-(const NCSeries<C>& a, const NCSeries<C>& b) { return nc_sub(a, b); }
template <Coefficient C>
NCSeries<C> operator*(const NCSeries<C>& a, const NCSeries<C>& b) { return nc_mul(a, b); }

template <Coefficient C>
std::string to_string(const NCSeries<C>& s) {
  std::vector<detail::RenderedTerm> terms;
  terms.reserve(s.terms().size());
  for (const auto& [e, c] : s.terms()) terms.push_back({e.m, e.n, to_string(c)});
  return detail::render_terms(std::move(terms));
}

/// Builds series sharing one truncation degree and one value of q.
template <Coefficient C>
class SeriesRing {
 public:
  SeriesRing(int trunc, C q) : trunc_(trunc), q_(std::move(q)) {}

  int trunc() const { return trunc_; }
  const C& q() const { return q_; }

  NCSeries<C> zero() const { return NCSeries<C>(trunc_, q_); }
  NCSeries<C> one() const { return NCSeries<C>::one(trunc_, q_); }
  NCSeries<C> constant(const C& c) const { return NCSeries<C>::constant(trunc_, q_, c); }
  NCSeries<C> x() const { return NCSeries<C>::x(trunc_, q_); }
  NCSeries<C> y() const { return NCSeries<C>::y(trunc_, q_); }
  NCSeries<C> monomial(const C& c, int m, int n) const { return NCSeries<C>::monomial(trunc_, q_, c, m, n); }

 private:
  int trunc_;
  C q_;
};

}  // namespace qpentagon
