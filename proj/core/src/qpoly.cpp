#include "qpentagon/qpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qpentagon/errors.hpp"

namespace qpentagon {
namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Integer polynomial with the same roots as p and unit content.
IntPoly primitive_part(const QPoly& p) {
  BigInt denom_lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coefficients().size());
  BigInt content = 0;
  for (const auto& c : p.coefficients()) {
    BigInt v = c.get_num() * (denom_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content != 0 && content != 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

void make_primitive(IntPoly& p) {
  BigInt content = 0;
  for (const auto& v : p) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 1) return;
  }
  if (content == 0) return;
  for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero), in place on a.
void pseudo_remainder(IntPoly& a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt la = a.back();
    for (auto& v : a) v *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
}

}  // namespace

QPoly::QPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly QPoly::constant(const BigRational& c) {
  QPoly p;
  if (!qpentagon::is_zero(c)) p.coeffs_.push_back(c);
  return p;
}

QPoly QPoly::monomial(const BigRational& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
  QPoly p;
  if (qpentagon::is_zero(c)) return p;
  p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, BigRational(0));
  p.coeffs_.back() = c;
  return p;
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

BigRational QPoly::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(exponent)];
}

void QPoly::trim() {
  while (!coeffs_.empty() && qpentagon::is_zero(coeffs_.back())) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  BigRational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(k), BigRational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPoly QPoly::scaled(const BigRational& c) const {
  if (qpentagon::is_zero(c)) return QPoly();
  QPoly r = *this;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(1 / leading());
}

BigRational QPoly::eval(const BigRational& q0) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q0;
    acc += *it;
  }
  return acc;
}

QPoly qpoly_arith(const QPoly& a, const QPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("qpoly_arith: unknown op");
}

QPolyDivision divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw NotInvertible("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<BigRational> rem = a.coefficients();
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRational(0));
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigRational inv_lead = 1 / b.leading();
  BigRational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational factor = rem[k + db] * inv_lead;
    if (is_zero(factor)) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      mpq_mul(t.get_mpq_t(), factor.get_mpq_t(), bc[i].get_mpq_t());
      rem[k + i] -= t;
    }
    quot[k] = std::move(factor);
  }
  rem.resize(db);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  auto [quotient, remainder] = divmod(a, b);
  if (!remainder.is_zero()) {
    throw std::logic_error("divexact: nonzero remainder " + to_string(remainder) + " dividing " + to_string(a) +
                           " by " + to_string(b));
  }
  return std::move(quotient);
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(1);
  if (a == b) return a.monic();

  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    pseudo_remainder(u, v);
    make_primitive(u);
    std::swap(u, v);
    if (!u.empty() && u.size() == 1) return QPoly(1);
  }
  std::vector<BigRational> out;
  out.reserve(u.size());
  for (auto& c : u) out.emplace_back(c);
  return QPoly(std::move(out)).monic();
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const BigRational& c = cs[i];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    const bool integral = mag.get_den() == 1;
    if (i == 0) {
      out += integral ? mag.get_str() : "(" + mag.get_str() + ")";
      continue;
    }
    if (mag != 1) out += integral ? mag.get_str() : "(" + mag.get_str() + ")";
    out += 'q';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace qpentagon
