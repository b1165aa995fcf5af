#pragma once

#include <random>

#include "qpentagon/ncseries.hpp"
#include "qpentagon/qpoly.hpp"
#include "qpentagon/qrat.hpp"
#include "qpentagon/torus.hpp"

namespace qpentagon::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline QPoly random_qpoly(Rng& rng, int max_degree = 3, long bound = 3) {
  std::vector<BigRational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree) + 1));
  for (auto& v : c) v = BigRational(uniform(rng, -bound, bound));
  return QPoly(std::move(c));
}

inline QPoly random_nonzero_qpoly(Rng& rng, int max_degree = 3, long bound = 3) {
  for (;;) {
    QPoly p = random_qpoly(rng, max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

inline QRat random_qrat(Rng& rng, int max_degree = 2) {
  return QRat(random_qpoly(rng, max_degree), random_nonzero_qpoly(rng, max_degree));
}

inline QRat random_nonzero_qrat(Rng& rng, int max_degree = 2) {
  return QRat(random_nonzero_qpoly(rng, max_degree), random_nonzero_qpoly(rng, max_degree));
}

/// Small coefficient for series terms: an integer, or occasionally a QRat with
/// a (1 - q^k) denominator.
template <Coefficient C>
C random_coefficient(Rng& rng, const C& q) {
  const C base(uniform(rng, -2, 2));
  if (uniform(rng, 0, 3) != 0) return base;
  return C(base / C(C(1L) - power(q, static_cast<int>(uniform(rng, 1, 3)))));
}

template <Coefficient C>
NCSeries<C> random_series(Rng& rng, int trunc, const C& q, int max_terms = 6) {
  NCSeries<C> s(trunc, q);
  const long terms = uniform(rng, 1, max_terms);
  for (long i = 0; i < terms; ++i) {
    const int total = static_cast<int>(uniform(rng, 0, trunc));
    const int m = static_cast<int>(uniform(rng, 0, total));
    s.accumulate(Exponent{m, total - m}, random_coefficient(rng, q));
  }
  return s;
}

template <Coefficient C>
NCSeries<C> random_invertible_series(Rng& rng, int trunc, const C& q, int max_terms = 6) {
  NCSeries<C> s = random_series(rng, trunc, q, max_terms);
  s.set(Exponent{0, 0}, C(uniform(rng, 1, 3)));
  return s;
}

template <Coefficient C>
TorusElem<C> random_torus(Rng& rng, const C& q, int max_terms = 3, int spread = 2) {
  TorusElem<C> t(q);
  const long terms = uniform(rng, 1, max_terms);
  for (long i = 0; i < terms; ++i) {
    t.accumulate(Exponent{static_cast<int>(uniform(rng, -spread, spread)), static_cast<int>(uniform(rng, -spread, spread))},
                 random_coefficient(rng, q));
  }
  return t;
}

}  // namespace qpentagon::testing
