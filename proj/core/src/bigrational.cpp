#include "qpentagon/bigrational.hpp"

#include <cctype>
#include <stdexcept>

namespace qpentagon {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

}  // namespace qpentagon
