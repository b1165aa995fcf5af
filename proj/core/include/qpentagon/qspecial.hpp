#pragma once

#include <vector>

#include "qpentagon/coefficient.hpp"
#include "qpentagon/fault.hpp"
#include "qpentagon/qpoly.hpp"

namespace qpentagon {

/// (q)_n = (1-q^n)(1-q^(n-1))...(1-q); (q)_0 = 1.
QPoly qpochhammer(int n);

/// Gaussian binomial (q)_n / ((q)_(n-k) (q)_k) by exact polynomial division;
/// zero outside 0 <= k <= n.
QPoly qbinomial(int n, int k);

/// (q)_n inside the coefficient field C for the given value of q.
template <Coefficient C>
C qpochhammer_value(int n, const C& q) {
  C acc(1L);
  C qk(1L);
  for (int k = 1; k <= n; ++k) {
    qk = qk * q;
    acc = acc * (C(1L) - qk);
  }
  return acc;
}

/// Rows 0..n_max of the q-Pascal triangle c(n,k) = q^k c(n-1,k) + c(n-1,k-1),
/// built in C. Row n has n+1 entries.
template <Coefficient C>
std::vector<std::vector<C>> qpascal_triangle(int n_max, const C& q) {
  const bool drop_qk = fault::active() == fault::Mutation::pascal_drop_qk;
  std::vector<std::vector<C>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  rows.push_back({C(1L)});
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<C> row(static_cast<std::size_t>(n) + 1, C(0L));
    C qk(1L);
    for (int k = 0; k <= n; ++k) {
      C value(0L);
      if (k < n) value = drop_qk ? prev[k] : C(qk * prev[k]);
      if (k > 0) value = value + prev[k - 1];
      row[k] = value;
      qk = qk * q;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qpentagon
