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

#ifndef DECOMP_ROOTFIND_HPP
#define DECOMP_ROOTFIND_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "decomp/field.hpp"
#include "decomp/poly.hpp"

namespace decomp {

using FpPoly = Polynomial<PrimeField>;
using QPoly = Polynomial<RationalField>;

// ---------------------------------------------------------------------------
// Factoring pieces over F_p

inline mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

/// X^(p^i) mod f for i = 0..count, computed by repeated Frobenius.
inline std::vector<FpPoly> frobenius_powers(const FpPoly& f, std::size_t count) {
  const PrimeField& k = f.field();
  const mpz_class p = to_mpz(k.modulus());
  std::vector<FpPoly> out;
  out.push_back(FpPoly::x(k) % f);
  for (std::size_t i = 0; i < count; ++i) out.push_back(powmod(out.back(), p, f));
  return out;
}

/// Rabin's test: f of degree n is irreducible iff X^(p^n) = X mod f and
/// gcd(X^(p^(n/r)) - X, f) = 1 for every prime r dividing n.
inline bool is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  auto frob = frobenius_powers(f, static_cast<std::size_t>(n));
  const FpPoly x = FpPoly::x(f.field()) % f;
  if (!(frob[static_cast<std::size_t>(n)] == x)) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    if (gcd(frob[static_cast<std::size_t>(n / r)] - x, f).degree() != 0) return false;
  }
  return true;
}

inline FpPoly random_poly_below(const PrimeField& k, int degree_bound, Rng& rng) {
  std::vector<Fp> c;
  for (int i = 0; i < degree_bound; ++i) c.push_back(k.sample(k.modulus(), rng));
  return FpPoly(k, std::move(c));
}

/// Cantor-Zassenhaus: splits g, a product of distinct monic irreducibles all of
/// degree i, into those factors. Output sorted.
inline std::vector<FpPoly> equal_degree_split(const FpPoly& g, int i, Rng& rng) {
  const PrimeField& k = g.field();
  std::vector<FpPoly> done, work{make_monic(g)};
  const std::uint64_t p = k.modulus();
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), to_mpz(p).get_mpz_t(), static_cast<unsigned long>(i));
  const mpz_class half = (q - 1) / 2;
  const FpPoly one = FpPoly::constant(k, k.one());
  while (!work.empty()) {
    FpPoly h = work.back();
    work.pop_back();
    if (h.degree() == i) {
      done.push_back(h);
      continue;
    }
    for (;;) {
      FpPoly a = random_poly_below(k, h.degree(), rng);
      if (a.degree() < 1) continue;
      FpPoly b(k);
      if (p == 2) {
        // Trace map onto F_2.
        FpPoly t = a % h;
        b = t;
        for (int j = 1; j < i; ++j) {
          t = mulmod(t, t, h);
          b = b + t;
        }
      } else {
        b = powmod(a, half, h) - one;
      }
      FpPoly c = gcd(b, h);
      if (c.degree() > 0 && c.degree() < h.degree()) {
        work.push_back(c);
        work.push_back(make_monic(h / c));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end(),
                                        [](const Fp& x, const Fp& y) { return x.v < y.v; });
  });
  return done;
}

struct RootReport {
  std::vector<Fp> base_roots;        // ascending
  std::optional<FpPoly> extension;   // irreducible factor, present only without base roots
};

inline bool is_square_free(const FpPoly& f) { return gcd(f, derivative(f)).degree() == 0; }

/// Roots of a square-free polynomial over F_p; with no roots in F_p, one
/// irreducible factor of least degree (ties broken by coefficient order).
inline RootReport roots_over_prime_field(const FpPoly& f_in, Rng& rng) {
  if (f_in.is_zero()) throw Error(ErrorCode::InvalidInstance, "root finding on the zero polynomial");
  const FpPoly f = make_monic(f_in);
  if (!is_square_free(f)) throw Error(ErrorCode::NotSquareFree, "polynomial has repeated factors");
  const PrimeField& k = f.field();
  RootReport report;
  if (f.degree() < 1) return report;
  const FpPoly x = FpPoly::x(k);
  const mpz_class p = to_mpz(k.modulus());
  FpPoly linear = gcd(powmod(x, p, f) - x, f);
  if (linear.degree() > 0) {
    for (const auto& factor : equal_degree_split(linear, 1, rng)) report.base_roots.push_back(-factor.coeff(0));
    std::sort(report.base_roots.begin(), report.base_roots.end(),
              [](const Fp& a, const Fp& b) { return a.v < b.v; });
    return report;
  }
  // Distinct-degree factorization, stopping at the first nontrivial degree.
  FpPoly rest = f;
  FpPoly frob = x;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    frob = powmod(frob, p, rest);
    FpPoly g = gcd(frob - x, rest);
    if (g.degree() > 0) {
      report.extension = equal_degree_split(g, i, rng).front();
      return report;
    }
  }
  report.extension = rest;  // rest is irreducible
  return report;
}

// ---------------------------------------------------------------------------
// Rational roots

namespace detail {

/// Primitive integer polynomial with the same roots as f.
inline std::vector<mpz_class> primitive_integer_coeffs(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (content != 0) {
    for (auto& v : z) v /= content;
  }
  return z;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class q = 1; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      if (q * q != n) out.push_back(n / q);
    }
  }
  return out;
}

inline bool is_root(const QPoly& f, const Rational& r) { return eval(f, r).is_zero(); }

/// Strips the zero root, returning whether it was present.
inline bool strip_zero_root(std::vector<mpz_class>& z) {
  bool zero = false;
  while (!z.empty() && z.front() == 0) {
    z.erase(z.begin());
    zero = true;
  }
  return zero;
}

inline void sort_unique(std::vector<Rational>& roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

}  // namespace detail

/// Rational roots by testing every ±a/b with a | constant term and b | leading
/// coefficient. Needs trial factoring, so only suited to small coefficients.
inline std::vector<Rational> rational_roots_by_divisors(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInstance, "root finding on the zero polynomial");
  auto z = detail::primitive_integer_coeffs(f);
  std::vector<Rational> roots;
  if (detail::strip_zero_root(z)) roots.emplace_back(0L);
  if (z.size() > 1) {
    const mpz_class limit("1000000000");
    if (abs(z.front()) > limit || abs(z.back()) > limit) {
      throw Error(ErrorCode::TooLarge, "coefficients too large for divisor enumeration");
    }
    for (const auto& a : detail::divisors(z.front())) {
      for (const auto& b : detail::divisors(z.back())) {
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          if (detail::is_root(f, r)) roots.push_back(r);
        }
      }
    }
  }
  detail::sort_unique(roots);
  return roots;
}

/// Rational roots by p-adic lifting: roots modulo a prime where the
/// square-free part stays square-free, Newton-lifted until rational
/// reconstruction within the divisor bounds is unique, then tested exactly.
inline std::vector<Rational> rational_roots_padic(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInstance, "root finding on the zero polynomial");
  const RationalField Q;
  std::vector<Rational> roots;
  QPoly sq = f;
  if (f.degree() > 0) sq = f / gcd(f, derivative(f));
  auto z = detail::primitive_integer_coeffs(sq);
  if (detail::strip_zero_root(z)) roots.emplace_back(0L);
  if (z.size() <= 1) return roots;
  std::vector<Rational> zq;
  for (const auto& c : z) zq.emplace_back(mpq_class(c));
  const QPoly g(Q, zq);
  const mpz_class bound_a = abs(z.front());
  const mpz_class bound_b = abs(z.back());
  const mpz_class needed = 2 * bound_a * bound_b;

  auto eval_mod = [&](const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
    mpz_class r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = (r * x + c[i]) % m;
    return r;
  };
  std::vector<mpz_class> dz;
  for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<unsigned long>(i));

  Rng rng(0x5eedULL);
  for (std::uint64_t cand = (1ULL << 31) - 1;; cand -= 2) {
    if (!is_prime_u64(cand)) continue;
    const PrimeField k(cand);
    const mpz_class pz = to_mpz(cand);
    if (mpz_divisible_p(z.back().get_mpz_t(), pz.get_mpz_t())) continue;
    std::vector<Fp> cm;
    for (const auto& c : z) cm.push_back(k.from_mpz(c));
    const FpPoly gm(k, cm);
    if (!is_square_free(gm)) continue;
    // Every root modulo p, not just one extension factor.
    FpPoly lin = gcd(powmod(FpPoly::x(k), pz, gm) - FpPoly::x(k), gm);
    std::vector<Fp> mod_roots;
    if (lin.degree() > 0) {
      for (const auto& fac : equal_degree_split(lin, 1, rng)) mod_roots.push_back(-fac.coeff(0));
    }
    for (const Fp& r0 : mod_roots) {
      mpz_class r = to_mpz(r0.v);
      mpz_class m = pz;
      while (m <= needed) {
        m = m * m;
        mpz_class fr = eval_mod(z, r, m);
        mpz_class dr = eval_mod(dz, r, m);
        mpz_class di;
        if (mpz_invert(di.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0) break;
        r = ((r - fr * di) % m + m) % m;
      }
      // Rational reconstruction: a = b*r mod m with |a| <= bound_a, 0 < b <= bound_b.
      mpz_class r0z = m, r1z = r, t0 = 0, t1 = 1;
      while (abs(r1z) > bound_a) {
        mpz_class q = r0z / r1z;
        mpz_class tmp = r0z - q * r1z;
        r0z = r1z;
        r1z = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
      }
      if (t1 == 0 || abs(t1) > bound_b) continue;
      Rational cand_root(r1z, t1);
      if (detail::is_root(g, cand_root)) roots.push_back(cand_root);
    }
    break;
  }
  detail::sort_unique(roots);
  return roots;
}

/// All rational roots (distinct, ascending).
inline std::vector<Rational> rational_roots(const QPoly& f) {
  auto z = detail::primitive_integer_coeffs(f);
  detail::strip_zero_root(z);
  const mpz_class limit("1000000000");
  if (!z.empty() && abs(z.front()) <= limit && abs(z.back()) <= limit) return rational_roots_by_divisors(f);
  return rational_roots_padic(f);
}

}  // namespace decomp

#endif  // DECOMP_ROOTFIND_HPP
