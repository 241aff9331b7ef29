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

#ifndef DECOMP_FIELD_HPP
#define DECOMP_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "decomp/error.hpp"

namespace decomp {

using Rng = std::mt19937_64;

/// A ring descriptor hands out constants and classifies elements; the
/// elements themselves carry the arithmetic operators.
template <class R>
concept Ring = requires(const R& r, const typename R::Element& a, std::int64_t k) {
  typename R::Element;
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.from_int(k) } -> std::same_as<typename R::Element>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.is_unit(a) } -> std::same_as<bool>;
  { r.inv(a) } -> std::same_as<typename R::Element>;
  { a + a } -> std::same_as<typename R::Element>;
  { a - a } -> std::same_as<typename R::Element>;
  { a * a } -> std::same_as<typename R::Element>;
  { -a } -> std::same_as<typename R::Element>;
  { a == a } -> std::same_as<bool>;
};

template <class F>
concept Field = Ring<F> && requires(const F& f, const typename F::Element& a) {
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.name() } -> std::same_as<std::string>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.size() } -> std::same_as<std::optional<std::uint64_t>>;
};

// ---------------------------------------------------------------------------
// Rationals

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "a" or "a/b" with optional sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

class RationalField {
 public:
  using Element = Rational;

  Rational zero() const { return Rational(0L); }
  Rational one() const { return Rational(1L); }
  Rational from_int(std::int64_t k) const { return Rational(static_cast<long>(k)); }
  Rational constant(const Rational& a) const { return a; }
  bool is_zero(const Rational& a) const { return a.is_zero(); }
  bool is_unit(const Rational& a) const { return !a.is_zero(); }
  Rational inv(const Rational& a) const {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return one() / a;
  }
  std::uint64_t characteristic() const { return 0; }
  std::optional<std::uint64_t> size() const { return std::nullopt; }
  std::string name() const { return "q"; }
  std::string format(const Rational& a) const { return a.to_string(); }
  Rational parse(std::string_view text) const { return Rational::parse(text); }

  /// Uniform draw from {0, ..., bound-1}.
  Rational sample(std::uint64_t bound, Rng& rng) const;

  bool operator==(const RationalField&) const = default;
};

// ---------------------------------------------------------------------------
// Prime fields

/// Residue modulo a word-sized prime. The modulus rides along so that
/// mixing elements of different fields is caught.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  friend bool operator==(const Fp& a, const Fp& b) {
    check(a, b);
    return a.v == b.v;
  }
  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint64_t s = a.v + b.v;
    if (s < a.v || s >= a.p) s -= a.p;
    return {s, a.p};
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    return {a.v >= b.v ? a.v - b.v : a.p - (b.v - a.v), a.p};
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % a.p), a.p};
  }
  friend Fp operator-(const Fp& a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
  friend Fp operator/(const Fp& a, const Fp& b);
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  static void check(const Fp& a, const Fp& b) {
    if (a.p != b.p) throw Error(ErrorCode::DescriptorMismatch, "elements of different prime fields");
  }
};

/// Inverse of a nonzero residue modulo p via the extended Euclidean algorithm.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic primality for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

class PrimeField {
 public:
  using Element = Fp;

  /// Throws NotPrime unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1 % p_, p_}; }
  Fp from_uint(std::uint64_t k) const { return {k % p_, p_}; }
  Fp from_int(std::int64_t k) const {
    if (k >= 0) return from_uint(static_cast<std::uint64_t>(k));
    return -from_uint(static_cast<std::uint64_t>(-(k + 1)) + 1);
  }
  Fp from_mpz(const mpz_class& k) const;
  Fp constant(const Fp& a) const { return a; }
  bool is_zero(const Fp& a) const { return a.v == 0; }
  bool is_unit(const Fp& a) const { return a.v != 0; }
  Fp inv(const Fp& a) const {
    if (a.p != p_) throw Error(ErrorCode::DescriptorMismatch, "element not in this prime field");
    if (a.v == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return {inverse_mod(a.v, p_), p_};
  }
  std::uint64_t characteristic() const { return p_; }
  std::optional<std::uint64_t> size() const { return p_; }
  std::string name() const { return "fp:" + std::to_string(p_); }
  std::string format(const Fp& a) const { return std::to_string(a.v); }
  /// Accepts any (possibly negative or rational "a/b") integer literal and reduces it.
  Fp parse(std::string_view text) const;

  /// Uniform draw from {0, ..., bound-1}; SampleBoundTooLarge if bound > p.
  Fp sample(std::uint64_t bound, Rng& rng) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

inline Fp operator/(const Fp& a, const Fp& b) {
  Fp::check(a, b);
  if (b.v == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in prime field");
  return a * Fp{inverse_mod(b.v, b.p), b.p};
}

/// Square-and-multiply in any ring.
template <Ring R>
typename R::Element power(const R& ring, typename R::Element base, std::uint64_t exp) {
  auto result = ring.one();
  while (exp != 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp != 0) base = base * base;
  }
  return result;
}

}  // namespace decomp

#endif  // DECOMP_FIELD_HPP
