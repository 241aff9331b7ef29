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

#include "decomp/series.hpp"

namespace decomp::detail {

namespace {

/// Integer numerators over a common denominator.
mpz_class clear_denominators(const std::vector<Rational>& a, std::vector<mpz_class>& out) {
  mpz_class den = 1;
  for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.value().get_den_mpz_t());
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = den / a[i].value().get_den();
    out[i] *= a[i].value().get_num();
  }
  return den;
}

mpz_class pack(const std::vector<mpz_class>& a, std::size_t bits) {
  mpz_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc <<= bits;
    acc += a[i];
  }
  return acc;
}

std::size_t max_bits(const std::vector<mpz_class>& a) {
  std::size_t b = 0;
  for (const auto& x : a) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

}  // namespace

std::vector<Rational> rational_mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  std::vector<mpz_class> ia, ib;
  const mpz_class da = clear_denominators(a, ia), db = clear_denominators(b, ib);
  // signed digits of width bits hold any |c_k| < 2^(bits-1)
  const std::size_t bits = max_bits(ia) + max_bits(ib) + mpz_sizeinbase(mpz_class(n).get_mpz_t(), 2) + 2;
  // only the low n digits are needed
  mpz_class prod = pack(ia, bits) * pack(ib, bits);
  mpz_fdiv_r_2exp(prod.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(bits * n));
  const mpz_class den = da * db;
  mpz_class half = 1, digit;
  half <<= bits - 1;
  std::vector<Rational> out(n);
  mp_bitcnt_t carry = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_fdiv_r_2exp(digit.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    digit += carry;
    carry = 0;
    if (digit >= half) {
      digit -= half << 1;
      carry = 1;
    }
    out[k] = Rational(digit, den);
  }
  return out;
}

}  // namespace decomp::detail
