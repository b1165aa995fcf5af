#pragma once

#include <string>

#include "qpentagon/bigrational.hpp"
#include "qpentagon/qpoly.hpp"

namespace qpentagon {

/// Element of Q(q): a reduced fraction num/den with den monic and
/// gcd(num, den) = 1. Zero is stored as 0/1.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(const BigRational& c) : num_(QPoly::constant(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den to canonical form. Throws NotInvertible if den = 0.
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::q()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRat operator-() const;
  /// Throws NotInvertible for zero.
  QRat inverse() const;
  /// Integer power; negative exponents invert.
  QRat pow(int exponent) const;

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  /// Throws NotInvertible when b = 0.
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  QRat& operator/=(const QRat& b) { return *this = *this / b; }

  friend bool operator==(const QRat&, const QRat&) = default;

 private:
  struct Reduced {};
  QRat(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

enum class RatOp { add, sub, mul, div };

QRat qrat_arith(const QRat& a, const QRat& b, RatOp op);

/// Exact value at q = q0. Throws PoleError when den(q0) = 0.
BigRational qrat_eval(const QRat& r, const BigRational& q0);

inline bool is_zero(const QRat& r) { return r.is_zero(); }

/// "num" when den = 1, "(num)/(den)" otherwise; num unparenthesized when it
/// is a single monomial.
std::string to_string(const QRat& r);

}  // namespace qpentagon
