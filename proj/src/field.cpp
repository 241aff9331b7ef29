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

#include "decomp/field.hpp"

#include <string>

namespace decomp {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1U;
  }
  return r;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return z;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational RationalField::sample(std::uint64_t bound, Rng& rng) const {
  if (bound < 2) throw Error(ErrorCode::InvalidInstance, "sample bound over Q must be at least 2");
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  const std::uint64_t draw = dist(rng);
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &draw);
  return Rational(mpq_class(z));
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  __int128 r0 = p, r1 = a % p, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw Error(ErrorCode::NotInvertible, "residue shares a factor with the modulus");
  if (t0 < 0) t0 += p;
  return static_cast<std::uint64_t>(t0);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are exact for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

Fp PrimeField::from_mpz(const mpz_class& k) const {
  mpz_class r;
  mpz_class m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &p_);
  mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(std::uint64_t), 0, 0, r.get_mpz_t());
  return {v, p_};
}

Fp PrimeField::parse(std::string_view text) const {
  Rational q = Rational::parse(text);
  return from_mpz(q.numerator()) / from_mpz(q.denominator());
}

Fp PrimeField::sample(std::uint64_t bound, Rng& rng) const {
  if (bound == 0) throw Error(ErrorCode::InvalidInstance, "sample bound must be positive");
  if (bound > p_) {
    throw Error(ErrorCode::SampleBoundTooLarge,
                "sample bound " + std::to_string(bound) + " exceeds field size " + std::to_string(p_));
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return {dist(rng), p_};
}

}  // namespace decomp
