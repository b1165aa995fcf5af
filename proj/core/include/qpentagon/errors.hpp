#pragma once

#include <stdexcept>
#include <string>

namespace qpentagon {

/// Evaluation of a rational function at a point where its denominator vanishes.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Binary series operation on operands with different truncation degrees.
class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inversion of an element that is not a unit (zero constant term, zero
/// rational function, non-monomial Laurent element).
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A specialized value of q for which some (q)_n with n <= degree vanishes.
class InadmissibleSpecialization : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpentagon

namespace qpentagon {

/// q-exponential applied to a series whose constant term is not zero.
class NonzeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qpentagon
