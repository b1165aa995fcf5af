#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qpentagon/bigrational.hpp"

namespace qpentagon {

/// How q is treated: as a formal parameter (coefficients in Q(q)) or fixed to
/// an exact rational q0 (coefficients in Q).
class QMode {
 public:
  static QMode symbolic() { return QMode(); }
  static QMode specialized(BigRational q0) { return QMode(std::move(q0)); }
  /// "symbolic" or a rational literal "p/r".
  static QMode parse(std::string_view text);

  bool is_symbolic() const { return !q0_.has_value(); }
  const BigRational& q0() const { return *q0_; }

  /// Throws InadmissibleSpecialization if (q0)_n = 0 for some 1 <= n <= degree,
  /// i.e. q0^k = 1 for some 1 <= k <= degree.
  void validate(int degree) const;

  /// "symbolic" or the rational value, e.g. "2/5".
  std::string to_string() const;

  friend bool operator==(const QMode&, const QMode&) = default;

 private:
  QMode() = default;
  explicit QMode(BigRational q0) : q0_(std::move(q0)) {}
  std::optional<BigRational> q0_;
};

}  // namespace qpentagon
