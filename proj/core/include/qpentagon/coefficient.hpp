#pragma once

#include <concepts>
#include <string>

#include "qpentagon/bigrational.hpp"
#include "qpentagon/qpoly.hpp"
#include "qpentagon/qrat.hpp"

namespace qpentagon {

/// Coefficient field of the series and torus algebras: QRat in symbolic mode,
/// BigRational once q has been specialized to a rational number.
template <class C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b) {
  { C(1L) };
  { static_cast<C>(a + b) };
  { static_cast<C>(a - b) };
  { static_cast<C>(a * b) };
  { static_cast<C>(a / b) };
  { static_cast<C>(-a) };
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <Coefficient C>
C power(const C& base, int exponent) {
  if (exponent < 0) return power(C(C(1L) / base), -exponent);
  C acc(1L);
  C b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) acc = acc * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return acc;
}

/// Evaluates a polynomial in q inside the field C at the given q.
inline QRat lift(const QPoly& p, const QRat&) { return QRat(p); }
inline BigRational lift(const QPoly& p, const BigRational& q) { return p.eval(q); }

}  // namespace qpentagon
