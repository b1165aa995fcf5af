#pragma once

#include <string>
#include <vector>

#include "qpentagon/bigrational.hpp"

namespace qpentagon {

/// Dense univariate polynomial in q over the rationals. Coefficients are
/// stored lowest degree first with no trailing zeros; the zero polynomial is
/// the empty sequence.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigRational> coefficients);
  QPoly(long constant);  // NOLINT(google-explicit-constructor)

  static QPoly constant(const BigRational& c);
  /// c * q^exponent, exponent >= 0.
  static QPoly monomial(const BigRational& c, int exponent);
  static QPoly q() { return monomial(BigRational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRational& leading() const { return coeffs_.back(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(int exponent) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  /// Multiplies by q^k, k >= 0.
  QPoly shifted(int k) const;
  QPoly scaled(const BigRational& c) const;
  /// Divides by the leading coefficient. The zero polynomial stays zero.
  QPoly monic() const;

  BigRational eval(const BigRational& q0) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

enum class PolyOp { add, sub, mul };

QPoly qpoly_arith(const QPoly& a, const QPoly& b, PolyOp op);

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division over the rationals. Throws NotInvertible for b = 0.
QPolyDivision divmod(const QPoly& a, const QPoly& b);

/// a / b when b divides a; throws std::logic_error on a nonzero remainder.
QPoly divexact(const QPoly& a, const QPoly& b);

/// Monic gcd over the rationals, computed with the primitive Euclidean
/// algorithm on integer content-free representatives.
/// Throws std::invalid_argument when both inputs are zero.
QPoly gcd(const QPoly& a, const QPoly& b);

/// "1+q+2q^2+q^3+q^4"; non-integer coefficients are parenthesized, "(1/2)q".
std::string to_string(const QPoly& p);

}  // namespace qpentagon
