#include "qpentagon/qrat.hpp"

#include <stdexcept>

#include "qpentagon/errors.hpp"

namespace qpentagon {

QRat::QRat(QPoly num, QPoly den) {
  if (den.is_zero()) throw NotInvertible("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den.is_constant()) {
    QPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  }
  const BigRational lead = den.leading();
  if (lead != 1) {
    const BigRational inv = 1 / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

QRat QRat::operator-() const { return QRat(-num_, den_, Reduced{}); }

QRat QRat::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of the zero rational function");
  const BigRational inv = 1 / num_.leading();
  return QRat(den_.scaled(inv), num_.scaled(inv), Reduced{});
}

QRat QRat::pow(int exponent) const {
  QRat base = exponent < 0 ? inverse() : *this;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  QRat acc(1);
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

namespace {

// a/b + s*c/d with both inputs reduced, using the common-denominator gcd
// to avoid a full gcd of the cross product.
QRat add_reduced(const QRat& x, const QRat& y, bool subtract) {
  if (y.is_zero()) return x;
  if (x.is_zero()) return subtract ? -y : y;
  const QPoly& a = x.num();
  const QPoly& b = x.den();
  const QPoly c = subtract ? -y.num() : y.num();
  const QPoly& d = y.den();
  if (b == d) {
    return QRat(a + c, b);
  }
  if (b.is_one()) return QRat(a * d + c, d);
  if (d.is_one()) return QRat(a + c * b, b);
  const QPoly g = gcd(b, d);
  if (g.is_one()) {
    // gcd(ad + cb, bd) = 1 already.
    return QRat(a * d + c * b, b * d);
  }
  const QPoly b1 = divexact(b, g);
  const QPoly d1 = divexact(d, g);
  return QRat(a * d1 + c * b1, b1 * d);
}

}  // namespace

QRat operator+(const QRat& a, const QRat& b) { return add_reduced(a, b, false); }
QRat operator-(const QRat& a, const QRat& b) { return add_reduced(a, b, true); }

QRat operator*(const QRat& x, const QRat& y) {
  if (x.is_zero() || y.is_zero()) return QRat();
  if (x.den_.is_one() && y.den_.is_one()) return QRat(x.num_ * y.num_, QPoly(1), QRat::Reduced{});
  const QPoly g1 = gcd(x.num_, y.den_);
  const QPoly g2 = gcd(y.num_, x.den_);
  QPoly a = g1.is_one() ? x.num_ : divexact(x.num_, g1);
  QPoly d = g1.is_one() ? y.den_ : divexact(y.den_, g1);
  QPoly c = g2.is_one() ? y.num_ : divexact(y.num_, g2);
  QPoly b = g2.is_one() ? x.den_ : divexact(x.den_, g2);
  // b and d are monic, so their product is monic.
  return QRat(a * c, b * d, QRat::Reduced{});
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

QRat qrat_arith(const QRat& a, const QRat& b, RatOp op) {
  switch (op) {
    case RatOp::add: return a + b;
    case RatOp::sub: return a - b;
    case RatOp::mul: return a * b;
    case RatOp::div: return a / b;
  }
  throw std::invalid_argument("qrat_arith: unknown op");
}

BigRational qrat_eval(const QRat& r, const BigRational& q0) {
  const BigRational d = r.den().eval(q0);
  if (is_zero(d)) {
    throw PoleError("pole of " + to_string(r) + " at q = " + to_string(q0));
  }
  return r.num().eval(q0) / d;
}

namespace {

bool is_single_term(const QPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients()) nonzero += is_zero(c) ? 0 : 1;
  return nonzero <= 1;
}

}  // namespace

std::string to_string(const QRat& r) {
  if (r.den().is_one()) return to_string(r.num());
  const std::string n = to_string(r.num());
  return (is_single_term(r.num()) ? n : "(" + n + ")") + "/(" + to_string(r.den()) + ")";
}

}  // namespace qpentagon
