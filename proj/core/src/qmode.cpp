#include "qpentagon/qmode.hpp"

#include "qpentagon/errors.hpp"
#include "qpentagon/qspecial.hpp"

namespace qpentagon {

QMode QMode::parse(std::string_view text) {
  if (text == "symbolic") return symbolic();
  return specialized(parse_rational(text));
}

void QMode::validate(int degree) const {
  if (is_symbolic()) return;
  if (is_zero(*q0_)) throw InadmissibleSpecialization("q = 0 is not invertible in the quantum torus");
  for (int n = 1; n <= degree; ++n) {
    if (is_zero(qpochhammer_value(n, *q0_))) {
      throw InadmissibleSpecialization("q = " + qpentagon::to_string(*q0_) + " makes (q)_" + std::to_string(n) +
                                       " vanish; pick q with q^k != 1 for k <= " + std::to_string(degree));
    }
  }
}

std::string QMode::to_string() const { return is_symbolic() ? "symbolic" : qpentagon::to_string(*q0_); }

}  // namespace qpentagon
