#include "qpentagon/qspecial.hpp"

#include <stdexcept>

namespace qpentagon {

QPoly qpochhammer(int n) {
  if (n < 0) throw std::invalid_argument("qpochhammer: negative index");
  QPoly acc(1);
  for (int k = 1; k <= n; ++k) acc *= QPoly(1) - QPoly::monomial(BigRational(1), k);
  return acc;
}

QPoly qbinomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("qbinomial: negative n");
  if (k < 0 || k > n) return QPoly();
  return divexact(qpochhammer(n), qpochhammer(n - k) * qpochhammer(k));
}

}  // namespace qpentagon
