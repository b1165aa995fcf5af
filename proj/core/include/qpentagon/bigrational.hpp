#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpentagon {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0 = 0/1)
// after every arithmetic operation.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p", "-p" or "p/r" (r != 0). Throws std::invalid_argument otherwise.
BigRational parse_rational(std::string_view text);

/// "p" for integers, "p/r" otherwise.
std::string to_string(const BigRational& value);

inline bool is_zero(const BigRational& value) { return sgn(value) == 0; }

}  // namespace qpentagon
