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

#ifndef DECOMP_LINEAR_SOLVE_HPP
#define DECOMP_LINEAR_SOLVE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "decomp/error.hpp"
#include "decomp/field.hpp"

namespace decomp {

/// Dense row-major matrix.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<E> data_;
};

template <Ring R>
Matrix<typename R::Element> identity_matrix(const R& ring, std::size_t n) {
  Matrix<typename R::Element> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <Ring R>
Matrix<typename R::Element> matmul(const R& ring, const Matrix<typename R::Element>& a,
                                   const Matrix<typename R::Element>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInstance, "matrix shapes do not match");
  Matrix<typename R::Element> c(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  }
  return c;
}

template <Ring R>
std::vector<typename R::Element> matvec(const R& ring, const Matrix<typename R::Element>& a,
                                        const std::vector<typename R::Element>& x) {
  std::vector<typename R::Element> y(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = y[i] + a(i, j) * x[j];
  }
  return y;
}

// ---------------------------------------------------------------------------
// Dual numbers F[L]/(L^2)

template <class E>
struct Dual {
  E a;  // constant part
  E b;  // coefficient of L

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
};

template <Field F>
class DualRing {
 public:
  using Element = Dual<typename F::Element>;

  explicit DualRing(F field) : f_(std::move(field)) {}
  const F& field() const { return f_; }

  Element make(const typename F::Element& a, const typename F::Element& b) const { return {a, b}; }
  Element constant(const typename F::Element& a) const { return {a, f_.zero()}; }
  Element zero() const { return constant(f_.zero()); }
  Element one() const { return constant(f_.one()); }
  Element from_int(std::int64_t k) const { return constant(f_.from_int(k)); }
  bool is_zero(const Element& x) const { return f_.is_zero(x.a) && f_.is_zero(x.b); }
  bool is_unit(const Element& x) const { return !f_.is_zero(x.a); }
  Element inv(const Element& x) const {
    if (!is_unit(x)) throw Error(ErrorCode::NotInvertible, "dual number with zero constant part");
    auto ia = f_.inv(x.a);
    return {ia, -(ia * ia * x.b)};
  }
  bool operator==(const DualRing& o) const { return f_ == o.f_; }

 private:
  F f_;
};

// ---------------------------------------------------------------------------
// Gaussian elimination

enum class SolveStatus { Solved, Inconsistent, Unlucky };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Inconsistent: return "inconsistent";
    case SolveStatus::Unlucky: return "unlucky";
  }
  return "?";
}

template <class E>
struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<E> x;  // empty unless Solved; free variables are 0
  std::size_t rank = 0;
};

enum class Kernel { Serial, Parallel };

/// Row count times width above which the parallel kernel forks threads.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace detail {

/// Clears column c below pivot row r (row r already normalized).
template <Ring R>
void eliminate_below(const R& ring, Matrix<typename R::Element>& a, std::vector<typename R::Element>& b,
                     std::size_t r, std::size_t c, Kernel kernel) {
  const std::size_t rows = a.rows(), cols = a.cols();
  auto update = [&](std::size_t i) {
    if (ring.is_zero(a(i, c))) return;
    const auto f = a(i, c);
    for (std::size_t j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    b[i] = b[i] - f * b[r];
  };
  const bool fork = kernel == Kernel::Parallel && (rows - r) * (cols - c + 1) >= kParallelThreshold;
  if (fork) {
    const auto begin = static_cast<std::ptrdiff_t>(r + 1), end = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = begin; i < end; ++i) update(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = r + 1; i < rows; ++i) update(i);
  }
}

}  // namespace detail

/// Row echelon elimination with the first usable pivot (a unit) in column
/// order, back substitution, free variables set to 0. A column whose
/// remaining entries are nonzero but none a unit yields Unlucky; a leftover
/// row with unit right side is Inconsistent, with a nonzero nonunit right
/// side Unlucky.
template <Ring R>
SolveResult<typename R::Element> gauss_solve(const R& ring, Matrix<typename R::Element> a,
                                             std::vector<typename R::Element> b, Kernel kernel = Kernel::Parallel) {
  using E = typename R::Element;
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInstance, "right side length differs from row count");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    bool nonzero = false;
    for (std::size_t i = r; i < rows; ++i) {
      if (ring.is_unit(a(i, c))) {
        p = i;
        break;
      }
      if (!ring.is_zero(a(i, c))) nonzero = true;
    }
    if (p == rows) {
      if (nonzero) return {SolveStatus::Unlucky, {}, r};
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(b[p], b[r]);
    }
    const E inv = ring.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    b[r] = b[r] * inv;
    detail::eliminate_below(ring, a, b, r, c, kernel);
    pivot_cols.push_back(c);
    ++r;
  }
  const std::size_t rank = r;
  bool unlucky = false;
  for (std::size_t i = rank; i < rows; ++i) {
    if (ring.is_unit(b[i])) return {SolveStatus::Inconsistent, {}, rank};
    if (!ring.is_zero(b[i])) unlucky = true;
  }
  if (unlucky) return {SolveStatus::Unlucky, {}, rank};
  std::vector<E> x(cols, ring.zero());
  for (std::size_t k = rank; k-- > 0;) {
    E s = b[k];
    for (std::size_t j = pivot_cols[k] + 1; j < cols; ++j) {
      if (!ring.is_zero(a(k, j))) s = s - a(k, j) * x[j];
    }
    x[pivot_cols[k]] = s;
  }
  return {SolveStatus::Solved, std::move(x), rank};
}

template <Field F>
SolveResult<typename F::Element> gauss_solve_field(const F& f, const Matrix<typename F::Element>& a,
                                                   const std::vector<typename F::Element>& b,
                                                   Kernel kernel = Kernel::Parallel) {
  return gauss_solve(f, a, b, kernel);
}

template <Field F>
SolveResult<Dual<typename F::Element>> gauss_solve_dual(const DualRing<F>& ring,
                                                        const Matrix<Dual<typename F::Element>>& a,
                                                        const std::vector<Dual<typename F::Element>>& b,
                                                        Kernel kernel = Kernel::Parallel) {
  return gauss_solve(ring, a, b, kernel);
}

/// Rank of a matrix over a field.
template <Field F>
std::size_t matrix_rank(const F& f, const Matrix<typename F::Element>& a, Kernel kernel = Kernel::Parallel) {
  std::vector<typename F::Element> zero(a.rows(), f.zero());
  return gauss_solve(f, a, zero, kernel).rank;
}

/// Gauss-Jordan inverse; Singular when the matrix is not invertible.
template <Field F>
Matrix<typename F::Element> matrix_inverse_field(const F& f, Matrix<typename F::Element> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::InvalidInstance, "inverse of a non-square matrix");
  auto inv = identity_matrix(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(a(p, c))) ++p;
    if (p == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const auto s = f.inv(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * s;
      inv(c, j) = inv(c, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(a(i, c))) continue;
      const auto t = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - t * a(c, j);
        inv(i, j) = inv(i, j) - t * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace decomp

#endif  // DECOMP_LINEAR_SOLVE_HPP
