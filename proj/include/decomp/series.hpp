// Copyright 2026 The decomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DECOMP_SERIES_HPP
#define DECOMP_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "decomp/error.hpp"
#include "decomp/field.hpp"
#include "decomp/linear_solve.hpp"
#include "decomp/poly.hpp"

namespace decomp {

namespace detail {

inline constexpr std::size_t kKaratsubaCutoff = 32;

/// Full product of two coefficient vectors of equal length n (2n - 1 terms).
template <Field F>
std::vector<typename F::Element> karatsuba(const F& f, const std::vector<typename F::Element>& a,
                                           const std::vector<typename F::Element>& b) {
  using E = typename F::Element;
  const std::size_t n = a.size();
  if (n == 0) return {};
  std::vector<E> r(2 * n - 1, f.zero());
  if (n <= kKaratsubaCutoff) {
    for (std::size_t i = 0; i < n; ++i) {
      if (f.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
  }
  const std::size_t m = (n + 1) / 2;
  std::vector<E> a0(a.begin(), a.begin() + m), b0(b.begin(), b.begin() + m);
  std::vector<E> a1(a.begin() + m, a.end()), b1(b.begin() + m, b.end());
  a1.resize(m, f.zero());
  b1.resize(m, f.zero());
  std::vector<E> as(m, f.zero()), bs(m, f.zero());
  for (std::size_t i = 0; i < m; ++i) {
    as[i] = a0[i] + a1[i];
    bs[i] = b0[i] + b1[i];
  }
  const auto z0 = karatsuba(f, a0, b0), z2 = karatsuba(f, a1, b1);
  auto z1 = karatsuba(f, as, bs);
  for (std::size_t i = 0; i < z1.size(); ++i) z1[i] = z1[i] - z0[i] - z2[i];
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] = r[i] + z0[i];
  for (std::size_t i = 0; i < z1.size() && i + m < r.size(); ++i) r[i + m] = r[i + m] + z1[i];
  for (std::size_t i = 0; i < z2.size() && i + 2 * m < r.size(); ++i) r[i + 2 * m] = r[i + 2 * m] + z2[i];
  return r;
}

/// Low a.size() terms of a*b over Q by Kronecker substitution.
std::vector<Rational> rational_mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace detail

/// Element of F[Y]/(Y^N). Always stores exactly N coefficients.
template <Field F>
class TruncatedSeries {
 public:
  using Element = typename F::Element;

  TruncatedSeries() = default;
  TruncatedSeries(F field, std::size_t precision) : f_(std::move(field)), c_(precision, f_.zero()) {}
  TruncatedSeries(F field, std::size_t precision, std::vector<Element> coeffs)
      : f_(std::move(field)), c_(std::move(coeffs)) {
    c_.resize(precision, f_.zero());
  }
  static TruncatedSeries constant(const F& f, std::size_t precision, const Element& a) {
    TruncatedSeries s(f, precision);
    if (precision > 0) s.c_[0] = a;
    return s;
  }
  /// Y at the given precision.
  static TruncatedSeries variable(const F& f, std::size_t precision) {
    TruncatedSeries s(f, precision);
    if (precision > 1) s.c_[1] = f.one();
    return s;
  }
  static TruncatedSeries from_poly(const Polynomial<F>& p, std::size_t precision) {
    return TruncatedSeries(p.field(), precision, std::vector<Element>(p.coeffs().begin(),
                                                                      p.coeffs().begin() + std::min<std::size_t>(
                                                                                              p.coeffs().size(), precision)));
  }

  const F& field() const { return f_; }
  std::size_t precision() const { return c_.size(); }
  const std::vector<Element>& coeffs() const { return c_; }
  const Element& coeff(std::size_t i) const { return c_[i]; }
  Element& coeff(std::size_t i) { return c_[i]; }
  Polynomial<F> to_poly() const { return Polynomial<F>(f_, c_); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [&](const Element& x) { return f_.is_zero(x); });
  }
  /// Lowest index with a nonzero coefficient, or precision() if none.
  std::size_t valuation() const {
    std::size_t i = 0;
    while (i < c_.size() && f_.is_zero(c_[i])) ++i;
    return i;
  }

  /// Drops or zero-pads coefficients to the new precision.
  TruncatedSeries with_precision(std::size_t n) const {
    TruncatedSeries s = *this;
    s.c_.resize(n, f_.zero());
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    TruncatedSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    TruncatedSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    const std::size_t n = a.c_.size();
    if constexpr (std::is_same_v<F, RationalField>) {
      if (n > 1) return TruncatedSeries(a.f_, n, detail::rational_mul_trunc(a.c_, b.c_));
    }
    if (n > detail::kKaratsubaCutoff) {
      auto full = detail::karatsuba(a.f_, a.c_, b.c_);
      full.resize(n);
      return TruncatedSeries(a.f_, n, std::move(full));
    }
    TruncatedSeries r(a.f_, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.f_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    return a.c_ == b.c_;
  }

  TruncatedSeries scaled(const Element& s) const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += f_.format(c_[i]);
    }
    return s + "] + O(Y^" + std::to_string(c_.size()) + ")";
  }

 private:
  static void check(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.c_.size() != b.c_.size()) {
      throw Error(ErrorCode::PrecisionMismatch, "series precisions " + std::to_string(a.c_.size()) + " and " +
                                                    std::to_string(b.c_.size()) + " differ");
    }
  }

  F f_;
  std::vector<Element> c_;
};

/// F[Y]/(Y^N) as a ring descriptor.
template <Field F>
class SeriesRing {
 public:
  using Element = TruncatedSeries<F>;

  SeriesRing(F field, std::size_t precision) : f_(std::move(field)), n_(precision) {}
  const F& field() const { return f_; }
  std::size_t precision() const { return n_; }

  Element constant(const typename F::Element& a) const { return Element::constant(f_, n_, a); }
  Element zero() const { return Element(f_, n_); }
  Element one() const { return constant(f_.one()); }
  Element from_int(std::int64_t k) const { return constant(f_.from_int(k)); }
  Element variable() const { return Element::variable(f_, n_); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_unit(const Element& a) const { return n_ > 0 && !f_.is_zero(a.coeff(0)); }
  /// Coefficient recurrence for 1/a.
  Element inv(const Element& a) const {
    if (!is_unit(a)) throw Error(ErrorCode::NotInvertible, "series with zero constant term");
    Element r(f_, n_);
    const auto c0 = f_.inv(a.coeff(0));
    r.coeff(0) = c0;
    for (std::size_t k = 1; k < n_; ++k) {
      auto s = f_.zero();
      for (std::size_t i = 1; i <= k; ++i) s = s + a.coeff(i) * r.coeff(k - i);
      r.coeff(k) = -(s * c0);
    }
    return r;
  }
  bool operator==(const SeriesRing& o) const { return n_ == o.n_ && f_ == o.f_; }

 private:
  F f_;
  std::size_t n_;
};

template <Field F>
Matrix<TruncatedSeries<F>> with_precision(const Matrix<TruncatedSeries<F>>& m, std::size_t n) {
  if (m.rows() == 0 || m.cols() == 0) return m;
  Matrix<TruncatedSeries<F>> r(m.rows(), m.cols(), m(0, 0).with_precision(n));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).with_precision(n);
  }
  return r;
}

/// Inverse modulo Y^N: exact inverse of the constant matrix, then
/// X <- X(2I - mX) with doubling precision.
template <Field F>
Matrix<TruncatedSeries<F>> series_matrix_inverse(const F& f, const Matrix<TruncatedSeries<F>>& m, std::size_t n) {
  const std::size_t k = m.rows();
  if (m.cols() != k) throw Error(ErrorCode::InvalidInstance, "inverse of a non-square matrix");
  Matrix<typename F::Element> m0(k, k, f.zero());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (m(i, j).precision() < n) throw Error(ErrorCode::PrecisionMismatch, "matrix precision below target");
      m0(i, j) = m(i, j).coeff(0);
    }
  }
  Matrix<typename F::Element> inv0;
  try {
    inv0 = matrix_inverse_field(f, m0);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::SingularAtZero, "constant term of the matrix is singular");
  }
  std::size_t prec = 1;
  Matrix<TruncatedSeries<F>> x(k, k, TruncatedSeries<F>(f, 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) x(i, j) = TruncatedSeries<F>::constant(f, 1, inv0(i, j));
  }
  while (prec < n) {
    prec = std::min(2 * prec, n);
    SeriesRing<F> ring(f, prec);
    auto xp = with_precision(x, prec);
    auto mx = matmul(ring, with_precision(m, prec), xp);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) mx(i, j) = (i == j ? ring.from_int(2) : ring.zero()) - mx(i, j);
    }
    x = matmul(ring, xp, mx);
  }
  return with_precision(x, n);
}

}  // namespace decomp

#endif  // DECOMP_SERIES_HPP
