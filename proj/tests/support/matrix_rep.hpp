#pragma once

#include <stdexcept>
#include <vector>

#include "qpentagon/bigrational.hpp"
#include "qpentagon/ncseries.hpp"

// Matrix realization of the q-plane used as an independent oracle.
//
// x acts as t*S and y as t*D on an n-dimensional space, where S is the shift
// e_k -> e_{k+1} and D is diagonal with D e_k = lambda q0^k e_k, so DS = q0 SD.
// Entries live in Q[t]/(t^{d+1}); the power of t tracks total degree, so a
// series truncated at degree d is represented exactly. All matrices in play are
// lower triangular, which makes dropping e_n, e_{n+1}, ... a homomorphism.

namespace qpentagon::testing {

class GradedMatrix {
 public:
  GradedMatrix(int n, int d) : n_(n), d_(d), data_(static_cast<std::size_t>(n * n * (d + 1))) {}

  static GradedMatrix identity(int n, int d) {
    GradedMatrix m(n, d);
    for (int i = 0; i < n; ++i) m.at(i, i, 0) = 1;
    return m;
  }

  int size() const { return n_; }
  int degree() const { return d_; }

  BigRational& at(int i, int j, int k) { return data_[index(i, j, k)]; }
  const BigRational& at(int i, int j, int k) const { return data_[index(i, j, k)]; }

  GradedMatrix& operator+=(const GradedMatrix& o) {
    for (std::size_t s = 0; s < data_.size(); ++s) data_[s] += o.data_[s];
    return *this;
  }
  GradedMatrix& operator-=(const GradedMatrix& o) {
    for (std::size_t s = 0; s < data_.size(); ++s) data_[s] -= o.data_[s];
    return *this;
  }
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }

  GradedMatrix scaled(const BigRational& c) const {
    GradedMatrix r = *this;
    for (auto& v : r.data_) v *= c;
    return r;
  }
  GradedMatrix operator-() const { return scaled(BigRational(-1)); }

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.n_ != b.n_ || a.d_ != b.d_) throw std::invalid_argument("GradedMatrix: shape mismatch");
    const int n = a.n_;
    const int d = a.d_;
    GradedMatrix r(n, d);
    BigRational prod;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l <= i; ++l) {
        for (int ka = 0; ka <= d; ++ka) {
          const BigRational& av = a.at(i, l, ka);
          if (sgn(av) == 0) continue;
          for (int j = 0; j <= l; ++j) {
            for (int kb = 0; ka + kb <= d; ++kb) {
              const BigRational& bv = b.at(l, j, kb);
              if (sgn(bv) == 0) continue;
              prod = av * bv;
              r.at(i, j, ka + kb) += prod;
            }
          }
        }
      }
    }
    return r;
  }

  /// True iff the two agree on rows and columns [0, block).
  bool block_equal(const GradedMatrix& o, int block) const {
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j)
        for (int k = 0; k <= d_; ++k)
          if (at(i, j, k) != o.at(i, j, k)) return false;
    return true;
  }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>((i * n_ + j) * (d_ + 1) + k);
  }

  int n_;
  int d_;
  std::vector<BigRational> data_;
};

class QPlaneMatrices {
 public:
  QPlaneMatrices(BigRational q0, BigRational lambda, int n, int d) : q0_(q0), lambda_(lambda), n_(n), d_(d) {}

  const BigRational& q0() const { return q0_; }
  int size() const { return n_; }
  int degree() const { return d_; }

  GradedMatrix one() const { return GradedMatrix::identity(n_, d_); }
  GradedMatrix zero() const { return GradedMatrix(n_, d_); }

  GradedMatrix x() const {
    GradedMatrix m(n_, d_);
    if (d_ >= 1)
      for (int k = 0; k + 1 < n_; ++k) m.at(k + 1, k, 1) = 1;
    return m;
  }

  GradedMatrix y() const {
    GradedMatrix m(n_, d_);
    if (d_ < 1) return m;
    BigRational v = lambda_;
    for (int k = 0; k < n_; ++k) {
      m.at(k, k, 1) = v;
      v *= q0_;
    }
    return m;
  }

  /// Inverse of a matrix whose t^0 part is c*I with c != 0.
  GradedMatrix inv(const GradedMatrix& a) const {
    const BigRational c = a.at(0, 0, 0);
    if (sgn(c) == 0) throw std::domain_error("inv: zero constant part");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (a.at(i, j, 0) != (i == j ? c : BigRational(0))) throw std::domain_error("inv: constant part is not scalar");
    const GradedMatrix v = one() - a.scaled(1 / c);
    GradedMatrix sum = one();
    for (int k = 1; k <= d_; ++k) sum = one() + v * sum;
    return sum.scaled(1 / c);
  }

  /// sum_{k <= d} z^k / (q0)_k for z with zero t^0 part.
  GradedMatrix qexp(const GradedMatrix& z) const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (sgn(z.at(i, j, 0)) != 0) throw std::domain_error("qexp: nonzero constant part");
    GradedMatrix sum = one();
    GradedMatrix power = one();
    BigRational poch = 1;
    BigRational qk = 1;
    for (int k = 1; k <= d_; ++k) {
      qk *= q0_;
      poch *= 1 - qk;
      power = power * z;
      sum += power.scaled(1 / poch);
    }
    return sum;
  }

  /// Image of sum c_{m,n} x^m y^n under the realization.
  GradedMatrix represent(const NCSeries<BigRational>& s) const {
    GradedMatrix r(n_, d_);
    for (const auto& [e, c] : s.terms()) {
      const int k = e.m + e.n;
      if (k > d_) continue;
      BigRational yv = lambda_;
      for (int j = 0; j + e.m < n_; ++j) {
        BigRational yn = 1;
        for (int p = 0; p < e.n; ++p) yn *= yv;
        r.at(j + e.m, j, k) += c * yn;
        yv *= q0_;
      }
    }
    return r;
  }

 private:
  BigRational q0_;
  BigRational lambda_;
  int n_;
  int d_;
};

}  // namespace qpentagon::testing
