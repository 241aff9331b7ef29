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

#ifndef DECOMP_HOMOTOPY_HPP
#define DECOMP_HOMOTOPY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "decomp/error.hpp"
#include "decomp/extension.hpp"
#include "decomp/field.hpp"
#include "decomp/linear_solve.hpp"
#include "decomp/poly.hpp"
#include "decomp/rootfind.hpp"
#include "decomp/series.hpp"
#include "decomp/special_interp.hpp"

namespace decomp {

// ---------------------------------------------------------------------------
// Coordinates (G_{d-1}, ..., G_0, H_{e-1}, ..., H_1)

template <Field F>
std::vector<typename F::Element> coords_of(const Interpolant<F>& s, std::size_t d, std::size_t e) {
  std::vector<typename F::Element> x;
  for (std::size_t k = d; k-- > 0;) x.push_back(s.g.coeff(k));
  for (std::size_t t = e - 1; t >= 1; --t) x.push_back(s.h.coeff(t));
  return x;
}

template <Field F>
Interpolant<F> interpolant_from_coords(const F& f, std::size_t d, std::size_t e,
                                       const std::vector<typename F::Element>& x) {
  std::vector<typename F::Element> g(d + 1, f.zero()), h(e + 1, f.zero());
  for (std::size_t k = 0; k < d; ++k) g[k] = x[d - 1 - k];
  g[d] = f.one();
  for (std::size_t t = 1; t < e; ++t) h[t] = x[d + e - 1 - t];
  h[e] = f.one();
  return {Polynomial<F>(f, std::move(g)), Polynomial<F>(f, std::move(h))};
}

namespace detail {

template <Ring R>
typename R::Element eval_h(const R& ring, const std::vector<typename R::Element>& gh, std::size_t d, std::size_t e,
                           const typename R::Element& a) {
  auto v = ring.one();
  for (std::size_t t = e - 1; t >= 1; --t) v = v * a + gh[d + e - 1 - t];
  return v * a;
}

template <Ring R>
typename R::Element eval_g(const R& ring, const std::vector<typename R::Element>& gh, std::size_t d,
                           const typename R::Element& y) {
  auto v = ring.one();
  for (std::size_t c = 0; c < d; ++c) v = v * y + gh[c];
  return v;
}

/// g'(y) = d y^{d-1} + sum_k k G_k y^{k-1}.
template <Ring R>
typename R::Element eval_dg(const R& ring, const std::vector<typename R::Element>& gh, std::size_t d,
                            const typename R::Element& y) {
  auto v = ring.from_int(static_cast<std::int64_t>(d));
  for (std::size_t k = d - 1; k >= 1; --k) v = v * y + ring.from_int(static_cast<std::int64_t>(k)) * gh[d - 1 - k];
  return v;
}

}  // namespace detail

/// P_i = (G o H)(alpha_i) - beta_i s over any ring holding the field's constants.
template <Ring R, Field F>
std::vector<typename R::Element> eval_system(const R& ring, const std::vector<typename R::Element>& gh,
                                             const typename R::Element& s, const InterpolationInstance<F>& inst) {
  std::vector<typename R::Element> out;
  for (std::size_t i = 0; i < inst.num_points(); ++i) {
    const auto a = ring.constant(inst.alpha[i]);
    const auto hv = detail::eval_h(ring, gh, inst.d, inst.e, a);
    out.push_back(detail::eval_g(ring, gh, inst.d, hv) - ring.constant(inst.beta[i]) * s);
  }
  return out;
}

/// dP/d(G|H): h(alpha_i)^{d-1}, ..., 1 then g'(h(alpha_i)) alpha_i^{e-1}, ..., alpha_i.
template <Ring R, Field F>
Matrix<typename R::Element> jacobian(const R& ring, const std::vector<typename R::Element>& gh,
                                     const InterpolationInstance<F>& inst) {
  const std::size_t d = inst.d, e = inst.e, n = inst.num_points();
  Matrix<typename R::Element> j(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = ring.constant(inst.alpha[i]);
    const auto hv = detail::eval_h(ring, gh, d, e, a);
    auto p = ring.one();
    for (std::size_t c = d; c-- > 0;) {
      j(i, c) = p;
      p = p * hv;
    }
    const auto dg = detail::eval_dg(ring, gh, d, hv);
    auto q = a;
    for (std::size_t t = 1; t < e; ++t) {
      j(i, d + e - 1 - t) = dg * q;
      q = q * a;
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Newton-Hensel lifting

template <Field F>
struct LiftedPath {
  std::vector<TruncatedSeries<F>> psi;
  /// Inverse Jacobian along psi, to the same precision.
  Matrix<TruncatedSeries<F>> jinv;

  std::size_t precision() const { return psi.empty() ? 0 : psi.front().precision(); }

  LiftedPath truncated(std::size_t n) const {
    LiftedPath r;
    for (const auto& s : psi) r.psi.push_back(s.with_precision(n));
    r.jinv = with_precision(jinv, n);
    return r;
  }
};

/// Continues a path correct modulo Y^p to precision n. Each step applies
/// the Newton operator with the inverse Jacobian known modulo Y^p, then
/// refines that inverse by X <- X(2I - JX).
template <Field F>
LiftedPath<F> extend_lift(const InterpolationInstance<F>& inst, LiftedPath<F> path, std::size_t n) {
  const F& f = inst.field;
  std::size_t prec = path.precision();
  const std::size_t k = path.psi.size();
  while (prec < n) {
    prec = std::min(2 * prec, n);
    SeriesRing<F> ring(f, prec);
    for (auto& s : path.psi) s = s.with_precision(prec);
    auto x = with_precision(path.jinv, prec);
    const auto p = eval_system(ring, path.psi, ring.variable(), inst);
    const auto step = matvec(ring, x, p);
    for (std::size_t i = 0; i < k; ++i) path.psi[i] = path.psi[i] - step[i];
    auto jx = matmul(ring, jacobian(ring, path.psi, inst), x);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) jx(i, j) = (i == j ? ring.from_int(2) : ring.zero()) - jx(i, j);
    }
    path.jinv = matmul(ring, x, jx);
  }
  return path;
}

/// The branch of the curve P(G, H, Y) = 0 through the start point, modulo Y^n.
template <Field F>
LiftedPath<F> newton_hensel_lift(const InterpolationInstance<F>& inst, const Interpolant<F>& start, std::size_t n) {
  const F& f = inst.field;
  const auto x0 = coords_of(start, inst.d, inst.e);
  Matrix<typename F::Element> inv0;
  try {
    inv0 = matrix_inverse_field(f, jacobian(f, x0, inst));
  } catch (const Error& err) {
    if (err.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::SingularJacobian, "Jacobian at the start point is singular");
  }
  LiftedPath<F> path;
  for (const auto& c : x0) path.psi.push_back(TruncatedSeries<F>::constant(f, 1, c));
  path.jinv = Matrix<TruncatedSeries<F>>(x0.size(), x0.size(), TruncatedSeries<F>(f, 1));
  for (std::size_t i = 0; i < x0.size(); ++i) {
    for (std::size_t j = 0; j < x0.size(); ++j) path.jinv(i, j) = TruncatedSeries<F>::constant(f, 1, inv0(i, j));
  }
  return extend_lift(inst, std::move(path), n);
}

// ---------------------------------------------------------------------------
// Minimal polynomial of L = lambda . psi

/// Polynomial in (Y, T) stored as T-coefficients that are polynomials in Y.
template <Field F>
struct BivariatePoly {
  std::vector<Polynomial<F>> t;

  std::size_t degree_t() const { return t.empty() ? 0 : t.size() - 1; }
  int degree_y() const {
    int m = -1;
    for (const auto& c : t) m = std::max(m, c.degree());
    return m;
  }
  BivariatePoly derivative_t() const {
    BivariatePoly r;
    const F& f = t.front().field();
    for (std::size_t i = 1; i < t.size(); ++i) r.t.push_back(t[i].scaled(f.from_int(static_cast<std::int64_t>(i))));
    if (r.t.empty()) r.t.push_back(Polynomial<F>(f));
    return r;
  }
  /// Substitutes a field value for Y.
  Polynomial<F> at_y(const typename F::Element& y) const {
    const F& f = t.front().field();
    std::vector<typename F::Element> c;
    for (const auto& a : t) c.push_back(eval(a, y));
    return Polynomial<F>(f, std::move(c));
  }
  /// Substitutes a series for T (precision taken from L).
  TruncatedSeries<F> at_t(const TruncatedSeries<F>& l) const {
    TruncatedSeries<F> r(l.field(), l.precision());
    for (std::size_t i = t.size(); i-- > 0;) r = r * l + TruncatedSeries<F>::from_poly(t[i], l.precision());
    return r;
  }
  BivariatePoly operator-() const {
    BivariatePoly r;
    for (const auto& c : t) r.t.push_back(-c);
    return r;
  }
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    const F& f = a.t.front().field();
    BivariatePoly r;
    for (std::size_t i = 0; i < std::max(a.t.size(), b.t.size()); ++i) {
      r.t.push_back((i < a.t.size() ? a.t[i] : Polynomial<F>(f)) + (i < b.t.size() ? b.t[i] : Polynomial<F>(f)));
    }
    return r;
  }
  /// Multiplies every coefficient by Y.
  BivariatePoly times_y() const {
    BivariatePoly r;
    for (const auto& c : t) r.t.push_back(c * Polynomial<F>::x(c.field()));
    return r;
  }
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
};

namespace detail {

template <Ring R>
std::vector<typename R::Element> series_mul(const R& ring, const std::vector<typename R::Element>& a,
                                            const std::vector<typename R::Element>& b) {
  if constexpr (std::is_same_v<R, RationalField>) {
    if (a.size() > 1) return rational_mul_trunc(a, b);
  }
  const std::size_t n = a.size();
  std::vector<typename R::Element> c(n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + a[i] * b[j];
  }
  return c;
}

/// Lazily extended table L^0, L^1, ... modulo Y^N.
template <Ring R>
class PowerCache {
 public:
  PowerCache(const R& ring, std::vector<typename R::Element> l) : ring_(ring), l_(std::move(l)) {
    std::vector<typename R::Element> one(l_.size(), ring_.zero());
    if (!one.empty()) one[0] = ring_.one();
    pw_.push_back(std::move(one));
  }
  const std::vector<typename R::Element>& operator[](std::size_t i) {
    while (pw_.size() <= i) pw_.push_back(series_mul(ring_, pw_.back(), l_));
    return pw_[i];
  }

 private:
  const R& ring_;
  std::vector<typename R::Element> l_;
  std::vector<std::vector<typename R::Element>> pw_;
};

}  // namespace detail

/// Coefficient rows of a_0, ..., a_k; a_k is monic in Y of degree m_prime.
template <class E>
struct MinpolySolution {
  std::size_t k = 0;
  std::size_t m_prime = 0;
  std::vector<std::vector<E>> a;
  bool minimality_verified = false;
};

/// Solves sum_{i<=k} a_i(Y) L^i = 0 mod Y^N with deg a_i < M (i < k) and
/// a_k = Y^{m_prime} + lower terms. Status of the linear solve is returned.
template <Ring R>
std::pair<SolveStatus, MinpolySolution<typename R::Element>> solve_monic_annihilator(
    const R& ring, detail::PowerCache<R>& pw, std::size_t k, std::size_t m_prime, std::size_t M, std::size_t N) {
  using E = typename R::Element;
  const std::size_t cols = k * M + m_prime;
  Matrix<E> a(N, cols, ring.zero());
  std::vector<E> rhs(N, ring.zero());
  for (std::size_t i = 0; i <= k; ++i) {
    const auto& li = pw[i];
    const std::size_t width = i < k ? M : m_prime;
    for (std::size_t t = 0; t < width; ++t) {
      for (std::size_t n = t; n < N; ++n) a(n, i * M + t) = li[n - t];
    }
  }
  const auto& lk = pw[k];
  for (std::size_t n = m_prime; n < N; ++n) rhs[n] = -lk[n - m_prime];
  auto sol = gauss_solve(ring, std::move(a), std::move(rhs));
  MinpolySolution<E> out;
  if (sol.status != SolveStatus::Solved) return {sol.status, out};
  out.k = k;
  out.m_prime = m_prime;
  for (std::size_t i = 0; i < k; ++i) out.a.emplace_back(sol.x.begin() + i * M, sol.x.begin() + (i + 1) * M);
  std::vector<E> lead(sol.x.begin() + k * M, sol.x.end());
  lead.push_back(ring.one());
  out.a.push_back(std::move(lead));
  return {SolveStatus::Solved, out};
}

namespace detail {

template <Ring R>
bool has_kernel(const R& ring, PowerCache<R>& pw, std::size_t ell, std::size_t M, std::size_t N) {
  using E = typename R::Element;
  const std::size_t cols = (ell + 1) * M;
  Matrix<E> a(N, cols, ring.zero());
  for (std::size_t i = 0; i <= ell; ++i) {
    const auto& li = pw[i];
    for (std::size_t t = 0; t < M; ++t) {
      for (std::size_t n = t; n < N; ++n) a(n, i * M + t) = li[n - t];
    }
  }
  auto sol = gauss_solve(ring, std::move(a), std::vector<E>(N, ring.zero()));
  if (sol.status == SolveStatus::Unlucky) throw Error(ErrorCode::Unlucky, "unit pivot missing in kernel test");
  return sol.rank < cols;
}

}  // namespace detail

/// Dense reference search: least k such that some nonzero (a_0, ..., a_k)
/// with deg a_i < M annihilates L mod Y^N (doubling then bisection on k),
/// then the least m_prime by a linear scan.
template <Ring R>
MinpolySolution<typename R::Element> minpoly_search_dense(const R& ring, const std::vector<typename R::Element>& l,
                                                    std::size_t M, std::size_t N, std::size_t k_cap) {
  detail::PowerCache<R> pw(ring, l);
  auto has_kernel = [&](std::size_t ell) { return detail::has_kernel(ring, pw, ell, M, N); };
  const std::size_t cap = std::min(2 * M, k_cap);
  std::size_t lo = 0, hi = 1;
  while (!has_kernel(hi)) {
    if (hi >= cap) throw Error(ErrorCode::NoSolutionWithinCaps, "no annihilator of T-degree <= " + std::to_string(cap));
    lo = hi;
    hi = std::min(2 * hi, cap);
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (has_kernel(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const std::size_t k = hi;
  // Solvability is not monotone in m_prime, so scan.
  for (std::size_t mp = 0; mp < M; ++mp) {
    auto [status, sol] = solve_monic_annihilator(ring, pw, k, mp, M, N);
    if (status == SolveStatus::Unlucky) throw Error(ErrorCode::Unlucky, "unit pivot missing in annihilator solve");
    if (status == SolveStatus::Solved) {
      sol.minimality_verified = k == 1 || !has_kernel(k - 1);
      return sol;
    }
  }
  throw Error(ErrorCode::NoSolutionWithinCaps, "no Y-monic annihilator of degree < " + std::to_string(M));
}


namespace detail {

/// Gaussian elimination fed one column at a time. Row operations of earlier
/// pivots are replayed on each new column, so the echelon form of every
/// column prefix is available without refactoring.
template <Ring R>
class IncrementalEliminator {
 public:
  using E = typename R::Element;
  enum class Outcome { Pivot, Dependent, Unlucky };

  IncrementalEliminator(const R& ring, std::size_t rows) : ring_(ring), rows_(rows) {}

  std::size_t rank() const { return pivots_.size(); }

  Outcome add_column(std::vector<E> v) {
    const std::size_t r = pivots_.size();
    reduce(v);
    std::size_t piv = rows_;
    bool nonzero = false;
    for (std::size_t i = r; i < rows_; ++i) {
      if (ring_.is_unit(v[i])) {
        piv = i;
        break;
      }
      if (!ring_.is_zero(v[i])) nonzero = true;
    }
    if (piv == rows_) {
      if (nonzero) return Outcome::Unlucky;
      last_ = std::vector<E>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
      return Outcome::Dependent;
    }
    std::swap(v[r], v[piv]);
    Pivot p{piv, ring_.inv(v[r]), {}, {}};
    p.above.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
    p.mult = std::move(v);
    pivots_.push_back(std::move(p));
    return Outcome::Pivot;
  }

  /// x with (last dependent column) = sum_j x_j (pivot column j).
  std::vector<E> dependency() const { return back_substitute(last_); }

  /// Coordinates of v in the pivot columns, or nothing if v is outside
  /// their span.
  std::optional<std::vector<E>> coordinates(std::vector<E> v) const {
    const std::size_t r = pivots_.size();
    reduce(v);
    for (std::size_t i = r; i < rows_; ++i) {
      if (!ring_.is_zero(v[i])) return std::nullopt;
    }
    v.resize(r);
    return back_substitute(v);
  }

 private:
  struct Pivot {
    std::size_t swap_row;
    E inv;
    std::vector<E> above;  // reduced entries in earlier pivot rows
    std::vector<E> mult;   // reduced column before normalization
  };

  void reduce(std::vector<E>& v) const {
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      const auto& p = pivots_[j];
      if (p.swap_row != j) std::swap(v[j], v[p.swap_row]);
      if (ring_.is_zero(v[j])) continue;
      v[j] = v[j] * p.inv;
      for (std::size_t i = j + 1; i < rows_; ++i) {
        if (!ring_.is_zero(p.mult[i])) v[i] = v[i] - p.mult[i] * v[j];
      }
    }
  }

  std::vector<E> back_substitute(const std::vector<E>& top) const {
    const std::size_t r = pivots_.size();
    std::vector<E> x(r, ring_.zero());
    for (std::size_t j = r; j-- > 0;) {
      E s = top[j];
      for (std::size_t jj = j + 1; jj < r; ++jj) {
        if (!ring_.is_zero(pivots_[jj].above[j])) s = s - pivots_[jj].above[j] * x[jj];
      }
      x[j] = s;
    }
    return x;
  }
  const R& ring_;
  std::size_t rows_;
  std::vector<Pivot> pivots_;
  std::vector<E> last_;
};

/// Feeds the columns Y^t L^i in the order (i, t) = (0, 0), (0, 1), ... and
/// stops at the first dependent one. With a target shape, every earlier
/// column must be independent and the target column dependent.
template <Ring R>
struct ScanState {
  IncrementalEliminator<R> el;
  std::vector<std::pair<std::size_t, std::size_t>> pivot_index;  // (i, t) of each pivot column

  ScanState(const R& ring, std::size_t rows) : el(ring, rows) {}
};

template <Ring R>
MinpolySolution<typename R::Element> scan_annihilator(const R& ring, PowerCache<R>& pw, std::size_t M, std::size_t N,
                                                      std::size_t k_cap,
                                                      std::optional<std::pair<std::size_t, std::size_t>> shape,
                                                      ScanState<R>& state) {
  using E = typename R::Element;
  auto& el = state.el;
  auto& pivot_index = state.pivot_index;
  for (std::size_t i = 0;; ++i) {
    if (i > k_cap) throw Error(ErrorCode::NoSolutionWithinCaps, "no annihilator of T-degree <= " + std::to_string(k_cap));
    const auto& li = pw[i];
    for (std::size_t t = 0; t < M; ++t) {
      std::vector<E> col(N, ring.zero());
      for (std::size_t n = t; n < N; ++n) col[n] = li[n - t];
      const bool target = shape && shape->first == i && shape->second == t;
      const auto outcome = el.add_column(std::move(col));
      if (outcome == IncrementalEliminator<R>::Outcome::Unlucky) {
        throw Error(ErrorCode::Unlucky, "unit pivot missing in annihilator elimination");
      }
      if (outcome == IncrementalEliminator<R>::Outcome::Pivot) {
        if (target) throw Error(ErrorCode::InconsistentDegrees, "perturbed annihilator has larger degree");
        pivot_index.emplace_back(i, t);
        continue;
      }
      if (shape && !target) throw Error(ErrorCode::InconsistentDegrees, "perturbed annihilator has smaller degree");
      MinpolySolution<E> out;
      out.k = i;
      out.m_prime = t;
      out.a.assign(i, std::vector<E>(M, ring.zero()));
      out.a.emplace_back(t + 1, ring.zero());
      out.a[i][t] = ring.one();
      const auto x = el.dependency();
      for (std::size_t j = 0; j < x.size(); ++j) out.a[pivot_index[j].first][pivot_index[j].second] = -x[j];
      return out;
    }
  }
}

}  // namespace detail

/// Least k, and for it the least m_prime, such that
/// sum_{i<=k} a_i(Y) L^i = 0 mod Y^N with deg a_i < M and a_k monic of
/// degree m_prime: the first dependent column in the order of
/// detail::scan_annihilator. Every column with i < k is a pivot, so no
/// annihilator of T-degree k - 1 exists.
/// The elimination of the columns before the dependent one is left in state.
template <Ring R>
MinpolySolution<typename R::Element> minpoly_search(const R& ring, const std::vector<typename R::Element>& l,
                                                    std::size_t M, std::size_t N, std::size_t k_cap,
                                                    detail::ScanState<R>& state) {
  detail::PowerCache<R> pw(ring, l);
  auto sol = detail::scan_annihilator(ring, pw, M, N, std::min(2 * M, k_cap), std::nullopt, state);
  if (sol.k == 0) throw Error(ErrorCode::NoSolutionWithinCaps, "precision too low for any annihilator");
  sol.minimality_verified = true;
  return sol;
}

template <Ring R>
MinpolySolution<typename R::Element> minpoly_search(const R& ring, const std::vector<typename R::Element>& l,
                                                    std::size_t M, std::size_t N, std::size_t k_cap) {
  detail::ScanState<R> state(ring, N);
  return minpoly_search(ring, l, M, N, k_cap, state);
}

/// The annihilator of the given shape (k, m_prime), or an error if the
/// column scan does not reach exactly that shape.
template <Ring R>
MinpolySolution<typename R::Element> annihilator_with_shape(const R& ring, const std::vector<typename R::Element>& l,
                                                            std::size_t k, std::size_t m_prime, std::size_t M,
                                                            std::size_t N) {
  detail::PowerCache<R> pw(ring, l);
  detail::ScanState<R> state(ring, N);
  return detail::scan_annihilator(ring, pw, M, N, k, std::make_pair(k, m_prime), state);
}

// ---------------------------------------------------------------------------
// Geometric solutions

enum class ParamFormula { DerivativeOnly, WithYTerm };

inline std::string to_string(ParamFormula f) {
  return f == ParamFormula::DerivativeOnly ? "derivative_only" : "with_y_term";
}

template <Field F>
struct CurveGeometricSolution {
  std::vector<typename F::Element> lambda;
  BivariatePoly<F> m;
  std::vector<BivariatePoly<F>> v;
  std::size_t k = 0;
  std::size_t m_prime = 0;
  std::size_t precision = 0;
  std::size_t M = 0;  // bound on deg_Y of the non-leading coefficients
  ParamFormula formula = ParamFormula::DerivativeOnly;
  bool minimality_verified = false;
};

template <Field F>
struct FiberGeometricSolution {
  std::vector<typename F::Element> lambda;
  Polynomial<F> m1;  // monic, square-free
  std::vector<Polynomial<F>> w;
};

template <Field F>
TruncatedSeries<F> linear_form(const F& f, const std::vector<typename F::Element>& lambda,
                               const std::vector<TruncatedSeries<F>>& psi) {
  TruncatedSeries<F> l(f, psi.front().precision());
  for (std::size_t j = 0; j < psi.size(); ++j) l = l + psi[j].scaled(lambda[j]);
  return l;
}

namespace detail {

template <Field F>
BivariatePoly<F> to_bivariate(const F& f, const std::vector<std::vector<typename F::Element>>& a) {
  BivariatePoly<F> m;
  for (const auto& c : a) m.t.emplace_back(f, c);
  return m;
}

}  // namespace detail

namespace detail {

/// Lambda-part of the annihilator of L + Lambda psi_j over F[Lambda]/(Lambda^2)
/// with the shape (k, m_prime), by elimination over the dual ring.
template <Field F>
BivariatePoly<F> dual_lambda_part(const F& f, const TruncatedSeries<F>& l, const TruncatedSeries<F>& psi_j,
                                  std::size_t k, std::size_t m_prime, std::size_t M) {
  const std::size_t N = l.precision();
  DualRing<F> dual(f);
  std::vector<Dual<typename F::Element>> lj;
  for (std::size_t n = 0; n < N; ++n) lj.push_back(dual.make(l.coeff(n), psi_j.coeff(n)));
  const auto sol = annihilator_with_shape(dual, lj, k, m_prime, M, N);
  std::vector<std::vector<typename F::Element>> part;
  for (const auto& row : sol.a) {
    std::vector<typename F::Element> r;
    for (const auto& x : row) r.push_back(x.b);
    part.push_back(std::move(r));
  }
  return to_bivariate(f, part);
}

/// The same Lambda-part from the constant-part elimination: the dual system
/// (A + Lambda B)(a + Lambda b) = 0 has the pivots of A, and its Lambda-part
/// reads A b = -(dm/dT)(Y, L) psi_j.
template <Field F>
BivariatePoly<F> lambda_part_from_scan(const F& f, const ScanState<F>& state, const TruncatedSeries<F>& dm_psi,
                                       std::size_t k, std::size_t m_prime, std::size_t M) {
  const auto x = state.el.coordinates(dm_psi.coeffs());
  if (!x) throw Error(ErrorCode::Unlucky, "unit pivot missing in the perturbed annihilator");
  std::vector<std::vector<typename F::Element>> part(k, std::vector<typename F::Element>(M, f.zero()));
  part.emplace_back(m_prime + 1, f.zero());
  for (std::size_t j = 0; j < x->size(); ++j) {
    const auto [i, t] = state.pivot_index[j];
    part[i][t] = -(*x)[j];
  }
  return to_bivariate(f, part);
}

}  // namespace detail

/// m from the plain linear form; v_j from the Lambda-part of the annihilator
/// of the perturbed form with lambda_j + Lambda. Both candidate
/// parametrizations are tested and the one satisfying
/// (dm/dT)(Y, L) psi_j = v_j(Y, L) mod Y^N is kept.
template <Field F>
CurveGeometricSolution<F> assemble_geometric_solution(const F& f, const LiftedPath<F>& path,
                                                      const std::vector<typename F::Element>& lambda, std::size_t M,
                                                      std::size_t k_cap) {
  const std::size_t N = path.precision();
  const auto l = linear_form(f, lambda, path.psi);
  detail::ScanState<F> state(f, N);
  auto plain = minpoly_search(f, l.coeffs(), M, N, k_cap, state);
  CurveGeometricSolution<F> cgs;
  cgs.lambda = lambda;
  cgs.k = plain.k;
  cgs.m_prime = plain.m_prime;
  cgs.precision = N;
  cgs.M = M;
  cgs.minimality_verified = plain.minimality_verified;
  cgs.m = detail::to_bivariate(f, plain.a);
  if (!cgs.m.at_t(l).is_zero()) throw Error(ErrorCode::Fail, "annihilator check failed");
  const auto dm = cgs.m.derivative_t();
  const auto dm_at_l = dm.at_t(l);

  std::optional<ParamFormula> chosen;
  for (std::size_t j = 0; j < path.psi.size(); ++j) {
    const auto target = dm_at_l * path.psi[j];
    const auto w = -detail::lambda_part_from_scan(f, state, target, plain.k, plain.m_prime, M);
    const BivariatePoly<F> cand[2] = {w, w + dm.times_y()};
    std::optional<ParamFormula> ok;
    for (int c = 0; c < 2 && !ok; ++c) {
      if (!chosen || *chosen == static_cast<ParamFormula>(c)) {
        if ((target - cand[c].at_t(l)).is_zero()) ok = static_cast<ParamFormula>(c);
      }
    }
    if (!ok) throw Error(ErrorCode::ParametrizationCheckFailed, "no parametrization candidate for coordinate " +
                                                                    std::to_string(j + 1));
    chosen = ok;
    cgs.v.push_back(cand[static_cast<int>(*ok)]);
  }
  cgs.formula = *chosen;
  return cgs;
}

/// Y = 1: m1 = m(1, T), w_j = v_j(1, T) / m1'(T) mod m1.
template <Field F>
FiberGeometricSolution<F> specialize_at_one(const CurveGeometricSolution<F>& cgs) {
  const F& f = cgs.m.t.front().field();
  auto m1 = cgs.m.at_y(f.one());
  if (m1.degree() != static_cast<int>(cgs.k)) {
    throw Error(ErrorCode::Unlucky, "leading coefficient of m vanishes at Y = 1");
  }
  const auto u = mod_inverse(derivative(m1), m1);
  FiberGeometricSolution<F> fgs{cgs.lambda, make_monic(m1), {}};
  for (const auto& v : cgs.v) fgs.w.push_back(mulmod(u, v.at_y(f.one()), m1));
  return fgs;
}

// ---------------------------------------------------------------------------
// Extraction

/// Solutions over F[T]/(modulus) with T the adjoined root.
template <Field F>
struct ExtensionAnswer {
  ExtensionField<F> field;
  Interpolant<ExtensionField<F>> solution;
};

template <Field F>
struct Extraction {
  std::vector<Interpolant<F>> base;
  std::optional<ExtensionAnswer<F>> extension;
  std::size_t discarded = 0;
};

template <Field F>
bool verify_in_extension(const InterpolationInstance<F>& inst, const ExtensionField<F>& k,
                         const Interpolant<ExtensionField<F>>& s) {
  InterpolationInstance<ExtensionField<F>> lifted{k, inst.d, inst.e, {}, {}};
  for (const auto& a : inst.alpha) lifted.alpha.push_back(k.embed(a));
  for (const auto& b : inst.beta) lifted.beta.push_back(k.embed(b));
  return verify_interpolant(lifted, s);
}

template <Field F>
std::optional<ExtensionAnswer<F>> extension_candidate(const InterpolationInstance<F>& inst,
                                                      const FiberGeometricSolution<F>& fgs,
                                                      const Polynomial<F>& modulus) {
  ExtensionField<F> k(inst.field, modulus);
  std::vector<typename ExtensionField<F>::Element> x;
  for (const auto& w : fgs.w) x.push_back(k.from_coeffs(w.coeffs()));
  auto s = interpolant_from_coords(k, inst.d, inst.e, x);
  if (!verify_in_extension(inst, k, s)) return std::nullopt;
  return ExtensionAnswer<F>{k, std::move(s)};
}

/// Reads points off the fiber: roots of m1 in F, otherwise one extension.
template <Field F>
Extraction<F> extract_solutions(const InterpolationInstance<F>& inst, const FiberGeometricSolution<F>& fgs, Rng& rng) {
  const F& f = inst.field;
  Extraction<F> out;
  std::vector<typename F::Element> roots;
  std::optional<Polynomial<F>> ext_modulus;
  if constexpr (std::is_same_v<F, PrimeField>) {
    auto report = roots_over_prime_field(fgs.m1, rng);
    roots = report.base_roots;
    ext_modulus = report.extension;
  } else if constexpr (std::is_same_v<F, RationalField>) {
    roots = rational_roots(fgs.m1);
    if (roots.empty() && fgs.m1.degree() >= 1) ext_modulus = fgs.m1;
  } else {
    throw Error(ErrorCode::Unsupported, "solution extraction over " + f.name());
  }
  for (const auto& r : roots) {
    std::vector<typename F::Element> x;
    for (const auto& w : fgs.w) x.push_back(eval(w, r));
    auto s = interpolant_from_coords(f, inst.d, inst.e, x);
    if (verify_interpolant(inst, s)) {
      out.base.push_back(std::move(s));
    } else {
      ++out.discarded;
    }
  }
  if (roots.empty() && ext_modulus) {
    out.extension = extension_candidate(inst, fgs, *ext_modulus);
    if (!out.extension) ++out.discarded;
  }
  if (out.base.empty() && !out.extension) throw Error(ErrorCode::NoVerifiedSolution, "no candidate verified");
  return out;
}

// ---------------------------------------------------------------------------
// Driver

struct SolveConfig {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> sample_bound = std::nullopt;  // default min(|F|, 2^16)
  std::size_t max_lambda_retries = 8;
  std::size_t max_doublings = 12;
};

struct PrecisionParams {
  std::size_t D_guess = 2;
  std::size_t delta_guess = 2;
  std::size_t M = 0;
  std::size_t N = 0;
  std::size_t hard_cap_M = 0;
  std::size_t hard_cap_N = 0;

  static std::size_t saturating_pow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      if (r > std::numeric_limits<std::size_t>::max() / b / 4) return std::numeric_limits<std::size_t>::max() / 4;
      r *= b;
    }
    return r;
  }
  static PrecisionParams initial(std::size_t d, std::size_t e) {
    PrecisionParams p;
    p.hard_cap_M = saturating_pow(d, d + e - 1) + 1;
    p.hard_cap_N = 2 * saturating_pow(d, 2 * (d + e - 1)) + 1;
    p.update();
    return p;
  }
  void update() {
    M = std::min(delta_guess + 1, hard_cap_M);
    N = std::min(2 * D_guess * delta_guess + 1, hard_cap_N);
  }
  bool at_caps() const { return M == hard_cap_M && N == hard_cap_N; }
  void double_guesses() {
    D_guess *= 2;
    delta_guess *= 2;
    update();
  }
};

struct AttemptRecord {
  std::size_t start_index = 0;
  std::size_t D_guess = 0, delta_guess = 0, M = 0, N = 0;
  std::vector<std::string> lambda;
  std::string outcome;  // "ok" or an error code
  std::size_t k = 0;
  std::size_t m_prime = 0;
  std::size_t deg_m1 = 0;
  std::string formula;
};

struct Transcript {
  std::vector<AttemptRecord> attempts;
  std::vector<std::string> diagnostics;
  std::vector<std::string> advisories;
  std::vector<std::size_t> deg_m1;  // per successful path
  std::size_t paths = 0;
};

template <Field F>
struct PathArtifacts {
  std::size_t start_index = 0;
  LiftedPath<F> path;
  CurveGeometricSolution<F> cgs;
  FiberGeometricSolution<F> fgs;
};

enum class SolveOutcome { Solved, Fail, NonGeneric };

inline std::string to_string(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::Solved: return "solved";
    case SolveOutcome::Fail: return "fail";
    case SolveOutcome::NonGeneric: return "non_generic";
  }
  return "?";
}

template <Field F>
struct HomotopyResult {
  SolveOutcome status = SolveOutcome::Fail;
  std::vector<Interpolant<F>> solutions;
  std::vector<ExtensionAnswer<F>> extensions;
  Transcript transcript;
  std::vector<PathArtifacts<F>> artifacts;
  std::string message;
};

/// 32 eps^-1 (d^2 + de)^2 d^{5(d+e-1)} with eps = 1/2, saturated.
inline long double field_size_threshold(std::size_t d, std::size_t e) {
  long double t = 64.0L * static_cast<long double>((d * d + d * e) * (d * d + d * e));
  for (std::size_t i = 0; i < 5 * (d + e - 1); ++i) t *= static_cast<long double>(d);
  return t;
}

namespace detail {

template <Field F>
bool same_solution(const Interpolant<F>& a, const Interpolant<F>& b) {
  return a.g == b.g && a.h == b.h;
}

/// One λ attempt on a lifted path; throws on unlucky or insufficient data.
template <Field F>
std::pair<PathArtifacts<F>, Extraction<F>> run_attempt(const InterpolationInstance<F>& inst,
                                                       const LiftedPath<F>& path2n,
                                                       const std::vector<typename F::Element>& lambda,
                                                       const PrecisionParams& pp, Rng& rng, AttemptRecord& rec) {
  const F& f = inst.field;
  const auto path = path2n.truncated(pp.N);
  const std::size_t k_cap = PrecisionParams::saturating_pow(inst.d, inst.num_points());
  auto cgs = assemble_geometric_solution(f, path, lambda, pp.M, k_cap);
  rec.k = cgs.k;
  rec.m_prime = cgs.m_prime;
  rec.formula = to_string(cgs.formula);
  // A spurious annihilator from too little precision fails at 2N.
  if (!cgs.m.at_t(linear_form(f, lambda, path2n.psi)).is_zero()) {
    throw Error(ErrorCode::NoSolutionWithinCaps, "annihilator does not persist to doubled precision");
  }
  if (!cgs.minimality_verified) throw Error(ErrorCode::NoSolutionWithinCaps, "minimality re-check failed");
  auto fgs = specialize_at_one(cgs);
  rec.deg_m1 = static_cast<std::size_t>(fgs.m1.degree());
  auto ex = extract_solutions(inst, fgs, rng);
  if (ex.discarded > 0) {
    throw Error(ErrorCode::NoVerifiedSolution, std::to_string(ex.discarded) + " candidate(s) failed verification");
  }
  return {PathArtifacts<F>{0, path, std::move(cgs), std::move(fgs)}, std::move(ex)};
}

}  // namespace detail

/// Deforms the beta = 0 instance to the target along S and reads the
/// solutions off the fiber at S = 1. Every start point of the beta = 0
/// fiber not already accounted for by an earlier path is tracked.
template <Field F>
HomotopyResult<F> solve(const InterpolationInstance<F>& inst, const SolveConfig& cfg) {
  HomotopyResult<F> res;
  auto& tr = res.transcript;
  const F& f = inst.field;
  inst.validate();
  const std::uint64_t ch = f.characteristic();
  if (ch != 0 && inst.d % ch == 0) {
    throw Error(ErrorCode::InvalidInstance, "characteristic " + std::to_string(ch) + " divides d");
  }
  Rng rng(cfg.seed);
  std::uint64_t bound = cfg.sample_bound.value_or(std::uint64_t{1} << 16);
  if (f.size()) bound = cfg.sample_bound ? *cfg.sample_bound : std::min<std::uint64_t>(*f.size(), bound);
  const long double threshold = field_size_threshold(inst.d, inst.e);
  if (static_cast<long double>(bound) < threshold) {
    tr.advisories.push_back("sample set of size " + std::to_string(bound) +
                            " is below the worst-case success threshold; relying on retries");
  }

  const bool beta_zero = std::all_of(inst.beta.begin(), inst.beta.end(), [&](const auto& b) { return f.is_zero(b); });
  const auto zero_inst = inst.with_zero_beta();
  SpecialResult<F> special;
  try {
    special = solve_special_all(zero_inst);
  } catch (const Error& err) {
    res.status = SolveOutcome::NonGeneric;
    res.message = err.what();
    return res;
  }
  if (beta_zero) {
    res.solutions = special.solutions();
    if (!special.all_solved()) {
      res.status = SolveOutcome::NonGeneric;
      res.message = "some refinement gave a singular system";
      return res;
    }
    res.status = SolveOutcome::Solved;
    return res;
  }
  // Start points: the distinguished one first, then the rest of W_0.
  const auto first = start_partition(inst.d, inst.e);
  std::vector<Interpolant<F>> starts;
  for (const auto& o : special.outcomes) {
    if (o.partition == first) {
      if (!o.solution) {
        res.status = SolveOutcome::NonGeneric;
        res.message = "start system is singular for " + first.to_string();
        return res;
      }
      starts.insert(starts.begin(), *o.solution);
    } else if (o.solution) {
      starts.push_back(*o.solution);
    } else {
      tr.diagnostics.push_back("refinement " + o.partition.to_string() + " is singular; not used as a start");
    }
  }

  std::vector<bool> covered(starts.size(), false);
  bool any_failed = false;
  for (std::size_t si = 0; si < starts.size(); ++si) {
    if (covered[si]) continue;
    ++tr.paths;
    LiftedPath<F> lifted;
    try {
      lifted = newton_hensel_lift(inst, starts[si], 1);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::SingularJacobian) throw;
      if (si == 0) {
        res.status = SolveOutcome::NonGeneric;
        res.message = "Jacobian at the start point is singular";
        return res;
      }
      tr.diagnostics.push_back("start " + std::to_string(si) + " has a singular Jacobian; skipped");
      any_failed = true;
      continue;
    }
    PrecisionParams pp = PrecisionParams::initial(inst.d, inst.e);
    std::optional<std::pair<PathArtifacts<F>, Extraction<F>>> found;
    for (std::size_t doubling = 0; !found; ++doubling) {
      if (lifted.precision() < 2 * pp.N) lifted = extend_lift(inst, std::move(lifted), 2 * pp.N);
      for (std::size_t retry = 0; retry < cfg.max_lambda_retries && !found; ++retry) {
        std::vector<typename F::Element> lambda;
        for (std::size_t j = 0; j < inst.num_points(); ++j) lambda.push_back(f.sample(bound, rng));
        AttemptRecord rec{si, pp.D_guess, pp.delta_guess, pp.M, pp.N, {}, "ok", 0, 0, 0, ""};
        for (const auto& x : lambda) rec.lambda.push_back(f.format(x));
        try {
          found = detail::run_attempt(inst, lifted, lambda, pp, rng, rec);
        } catch (const Error& err) {
          rec.outcome = to_string(err.code());
          tr.attempts.push_back(rec);
          if (err.code() == ErrorCode::NoSolutionWithinCaps) break;
          switch (err.code()) {
            case ErrorCode::Unlucky:
            case ErrorCode::ParametrizationCheckFailed:
            case ErrorCode::InconsistentDegrees:
            case ErrorCode::NotCoprime:
            case ErrorCode::NoVerifiedSolution:
            case ErrorCode::NotSquareFree:
              continue;
            default:
              throw;
          }
        }
        tr.attempts.push_back(rec);
      }
      if (found) break;
      if (pp.at_caps() || doubling + 1 > cfg.max_doublings) break;
      pp.double_guesses();
    }
    if (!found) {
      tr.diagnostics.push_back("path from start " + std::to_string(si) + " failed");
      any_failed = true;
      continue;
    }
    auto& [art, ex] = *found;
    art.start_index = si;
    tr.deg_m1.push_back(static_cast<std::size_t>(art.fgs.m1.degree()));
    // Starts on the same component are roots of m(0, T).
    const auto m0 = art.cgs.m.at_y(f.zero());
    for (std::size_t sj = si + 1; sj < starts.size(); ++sj) {
      if (covered[sj]) continue;
      const auto x = coords_of(starts[sj], inst.d, inst.e);
      auto t = f.zero();
      for (std::size_t j = 0; j < x.size(); ++j) t = t + art.cgs.lambda[j] * x[j];
      if (f.is_zero(eval(m0, t))) covered[sj] = true;
    }
    for (auto& s : ex.base) {
      bool dup = false;
      for (const auto& o : res.solutions) dup = dup || detail::same_solution(o, s);
      if (!dup) res.solutions.push_back(std::move(s));
    }
    if (ex.extension) res.extensions.push_back(std::move(*ex.extension));
    res.artifacts.push_back(std::move(art));
  }
  if (res.solutions.empty() && res.extensions.empty()) {
    res.status = SolveOutcome::Fail;
    res.message = "no verified solution within the retry and doubling limits";
    return res;
  }
  if (any_failed) tr.diagnostics.push_back("solution set may be incomplete");
  res.status = SolveOutcome::Solved;
  return res;
}

}  // namespace decomp

#endif  // DECOMP_HOMOTOPY_HPP
