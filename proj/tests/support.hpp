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

#ifndef DECOMP_TESTS_SUPPORT_HPP
#define DECOMP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "decomp/descriptor.hpp"
#include "decomp/extension.hpp"
#include "decomp/field.hpp"
#include "decomp/poly.hpp"
#include "decomp/special_interp.hpp"

namespace testing {

using namespace decomp;

inline Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

inline std::vector<Rational> qs(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (auto x : v) out.push_back(q(x));
  return out;
}

inline std::vector<Fp> fps(const PrimeField& f, std::initializer_list<std::int64_t> v) {
  std::vector<Fp> out;
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

/// Small random rational with numerator and denominator below `bound`.
inline Rational random_rational(Rng& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return q(num(rng), den(rng));
}

template <Field F>
typename F::Element random_element(const F& f, Rng& rng) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return random_rational(rng);
  } else {
    const auto sz = f.size();
    return f.sample(std::min<std::uint64_t>(*sz, 1u << 20), rng);
  }
}

template <Field F>
typename F::Element random_nonzero(const F& f, Rng& rng) {
  while (true) {
    auto a = random_element(f, rng);
    if (!f.is_zero(a)) return a;
  }
}

template <Field F>
Polynomial<F> random_poly(const F& f, int degree, Rng& rng, bool monic = false) {
  std::vector<typename F::Element> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_element(f, rng));
  c.push_back(monic ? f.one() : random_nonzero(f, rng));
  return Polynomial<F>(f, std::move(c));
}

/// Distinct nodes drawn uniformly from F_p.
inline std::vector<Fp> distinct_nodes(const PrimeField& f, std::size_t n, Rng& rng) {
  std::set<std::uint64_t> used;
  std::vector<Fp> out;
  while (out.size() < n) {
    auto a = f.sample(f.modulus(), rng);
    if (used.insert(a.v).second) out.push_back(a);
  }
  return out;
}

/// Evaluation by explicit powers, independent of Horner.
template <Field F>
typename F::Element eval_by_powers(const Polynomial<F>& p, const typename F::Element& x) {
  const F& f = p.field();
  auto s = f.zero();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s = s + p.coeffs()[i] * power(f, x, i);
  return s;
}

/// g(h) by expanding sum g_i h^i with repeated multiplication.
template <Field F>
Polynomial<F> compose_by_powers(const Polynomial<F>& g, const Polynomial<F>& h) {
  const F& f = g.field();
  Polynomial<F> r(f), hp = Polynomial<F>::constant(f, f.one());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    r = r + hp.scaled(g.coeffs()[i]);
    hp = hp * h;
  }
  return r;
}

}  // namespace testing

#endif  // DECOMP_TESTS_SUPPORT_HPP
