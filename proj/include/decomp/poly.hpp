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

#ifndef DECOMP_POLY_HPP
#define DECOMP_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "decomp/error.hpp"
#include "decomp/field.hpp"

namespace decomp {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
template <Field F>
class Polynomial {
 public:
  using Element = typename F::Element;

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const F& f, const Element& c) { return Polynomial(f, {c}); }
  static Polynomial monomial(const F& f, const Element& c, std::size_t deg) {
    std::vector<Element> v(deg + 1, f.zero());
    v[deg] = c;
    return Polynomial(f, std::move(v));
  }
  static Polynomial x(const F& f) { return monomial(f, f.one(), 1); }
  static Polynomial from_ints(const F& f, std::initializer_list<std::int64_t> ks) {
    std::vector<Element> v;
    for (auto k : ks) v.push_back(f.from_int(k));
    return Polynomial(f, std::move(v));
  }

  const F& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Element leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Polynomial scaled(const Element& s) const {
    std::vector<Element> v(c_);
    for (auto& x : v) x = x * s;
    return Polynomial(field_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Element> v(a.c_);
    for (auto& x : v) x = -x;
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.field_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += field_.format(c_[i]);
    }
    return s + "]";
  }

 private:
  static void check(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw Error(ErrorCode::DescriptorMismatch, "polynomials over different fields");
  }
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

template <Field F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const F& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial<F>(f), a};
  std::vector<typename F::Element> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<typename F::Element> q(r.size() - db, f.zero());
  const auto lead_inv = f.inv(bc.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    auto t = r[i] * lead_inv;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * bc[j];
  }
  r.resize(db);
  return {Polynomial<F>(f, std::move(q)), Polynomial<F>(f, std::move(r))};
}

template <Field F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
  return divmod(a, b).second;
}

template <Field F>
Polynomial<F> operator/(const Polynomial<F>& a, const Polynomial<F>& b) {
  return divmod(a, b).first;
}

template <Field F>
Polynomial<F> make_monic(const Polynomial<F>& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return a.scaled(a.field().inv(a.leading()));
}

/// Formal derivative; coefficients i*a_i are reduced in the field's characteristic.
template <Field F>
Polynomial<F> derivative(const Polynomial<F>& a) {
  const F& f = a.field();
  if (a.degree() < 1) return Polynomial<F>(f);
  std::vector<typename F::Element> v;
  v.reserve(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    v.push_back(f.from_int(static_cast<std::int64_t>(i)) * a.coeffs()[i]);
  }
  return Polynomial<F>(f, std::move(v));
}

/// Horner evaluation.
template <Field F>
typename F::Element eval(const Polynomial<F>& p, const typename F::Element& x) {
  auto r = p.field().zero();
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + p.coeffs()[i];
  return r;
}

/// Evaluates p at a point of a ring that embeds p's coefficient field.
template <Field F, class Target, class Embed>
typename Target::Element eval_in(const Polynomial<F>& p, const Target& ring, const typename Target::Element& x,
                                 Embed&& embed) {
  auto r = ring.zero();
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + embed(p.coeffs()[i]);
  return r;
}

/// g(h(X)) by Horner over the coefficients of g.
template <Field F>
Polynomial<F> compose(const Polynomial<F>& g, const Polynomial<F>& h) {
  if (!(g.field() == h.field())) throw Error(ErrorCode::DescriptorMismatch, "composition over different fields");
  Polynomial<F> r(g.field());
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    r = r * h + Polynomial<F>::constant(g.field(), g.coeffs()[i]);
  }
  return r;
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <Field F>
struct XgcdResult {
  Polynomial<F> g;  // monic
  Polynomial<F> s;
  Polynomial<F> t;  // s*a + t*b = g
};

template <Field F>
XgcdResult<F> xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& f = a.field();
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> s0 = Polynomial<F>::constant(f, f.one()), s1(f);
  Polynomial<F> t0(f), t1 = Polynomial<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = f.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

/// u with a*u = 1 (mod m), deg u < deg m. NotCoprime when gcd(a, m) != 1.
template <Field F>
Polynomial<F> mod_inverse(const Polynomial<F>& a, const Polynomial<F>& m) {
  if (m.degree() < 1) throw Error(ErrorCode::InvalidModulus, "modulus must have degree at least 1");
  auto res = xgcd(a % m, m);
  if (res.g.degree() != 0) {
    throw Error(ErrorCode::NotCoprime, "gcd has degree " + std::to_string(res.g.degree()));
  }
  return res.s % m;
}

template <Field F>
Polynomial<F> mulmod(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& m) {
  return (a * b) % m;
}

/// base^exp mod m with an arbitrary-size exponent.
template <Field F>
Polynomial<F> powmod(const Polynomial<F>& base, const mpz_class& exp, const Polynomial<F>& m) {
  const F& f = base.field();
  Polynomial<F> result = Polynomial<F>::constant(f, f.one()) % m;
  Polynomial<F> b = base % m;
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

/// The unique monic degree-d polynomial through d points with distinct
/// abscissae: X^d plus the Lagrange interpolant of (x_k, y_k - x_k^d).
template <Field F>
Polynomial<F> interpolate_monic(const F& f, const std::vector<std::pair<typename F::Element, typename F::Element>>& pts) {
  const std::size_t d = pts.size();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (pts[i].first == pts[j].first) throw Error(ErrorCode::DuplicateNodes, "interpolation nodes coincide");
    }
  }
  Polynomial<F> result = Polynomial<F>::monomial(f, f.one(), d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& [xk, yk] = pts[k];
    auto target = yk - power(f, xk, d);
    auto denom = f.one();
    Polynomial<F> basis = Polynomial<F>::constant(f, f.one());
    for (std::size_t j = 0; j < d; ++j) {
      if (j == k) continue;
      denom = denom * (xk - pts[j].first);
      basis = basis * Polynomial<F>(f, {-pts[j].first, f.one()});
    }
    result = result + basis.scaled(target * f.inv(denom));
  }
  return result;
}

}  // namespace decomp

#endif  // DECOMP_POLY_HPP
