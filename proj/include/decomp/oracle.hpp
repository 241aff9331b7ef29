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

#ifndef DECOMP_ORACLE_HPP
#define DECOMP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "decomp/error.hpp"
#include "decomp/field.hpp"
#include "decomp/linear_solve.hpp"
#include "decomp/special_interp.hpp"

namespace decomp {

struct OracleResult {
  std::vector<Interpolant<PrimeField>> solutions;
  std::size_t count = 0;
  std::uint64_t enumerated = 0;
};

inline constexpr std::uint64_t kOracleLimit = 100000000;

namespace detail {

/// Scans all tuples (g_0, ..., g_{d-1}, h_1, ..., h_{e-1}) whose first
/// entry is g0, in lexicographic order.
inline std::vector<Interpolant<PrimeField>> oracle_slice(const InterpolationInstance<PrimeField>& inst,
                                                         std::uint64_t g0) {
  const PrimeField& f = inst.field;
  const std::uint64_t p = f.modulus();
  const std::size_t d = inst.d, e = inst.e, n = d + e - 1;
  std::vector<std::uint64_t> digits(n, 0);
  digits[0] = g0;
  std::vector<Interpolant<PrimeField>> out;
  std::vector<Fp> g(d + 1, f.zero()), h(e + 1, f.zero());
  g[d] = f.one();
  h[e] = f.one();
  while (true) {
    for (std::size_t k = 0; k < d; ++k) g[k] = f.from_uint(digits[k]);
    for (std::size_t t = 1; t < e; ++t) h[t] = f.from_uint(digits[d + t - 1]);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Fp hv = f.zero();
      for (std::size_t t = e + 1; t-- > 0;) hv = hv * inst.alpha[i] + h[t];
      Fp gv = f.zero();
      for (std::size_t k = d + 1; k-- > 0;) gv = gv * hv + g[k];
      ok = gv == inst.beta[i];
    }
    if (ok) out.push_back({Polynomial<PrimeField>(f, g), Polynomial<PrimeField>(f, h)});
    std::size_t pos = n;
    while (pos > 1 && ++digits[pos - 1] == p) digits[--pos] = 0;
    if (pos == 1) break;
  }
  return out;
}

}  // namespace detail

/// Every normalized (g, h) over F_p through the points, by exhaustive
/// enumeration. TooLarge when p^{d+e-1} exceeds 10^8.
inline OracleResult brute_force_interpolants(const InterpolationInstance<PrimeField>& inst,
                                             Kernel kernel = Kernel::Parallel) {
  inst.validate();
  const std::uint64_t p = inst.field.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < inst.num_points(); ++i) {
    if (total > kOracleLimit / p) throw Error(ErrorCode::TooLarge, "search space exceeds 10^8 tuples");
    total *= p;
  }
  std::vector<std::vector<Interpolant<PrimeField>>> slices(p);
  if (kernel == Kernel::Parallel) {
    const auto np = static_cast<std::int64_t>(p);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < np; ++c) {
      slices[static_cast<std::size_t>(c)] = detail::oracle_slice(inst, static_cast<std::uint64_t>(c));
    }
  } else {
    for (std::uint64_t c = 0; c < p; ++c) slices[c] = detail::oracle_slice(inst, c);
  }
  OracleResult r;
  r.enumerated = total;
  for (auto& s : slices) {
    for (auto& x : s) r.solutions.push_back(std::move(x));
  }
  r.count = r.solutions.size();
  return r;
}

/// Sort key matching the oracle enumeration order.
inline std::vector<std::uint64_t> oracle_key(const Interpolant<PrimeField>& s, std::size_t d, std::size_t e) {
  std::vector<std::uint64_t> k;
  for (std::size_t i = 0; i < d; ++i) k.push_back(s.g.coeff(i).v);
  for (std::size_t t = 1; t < e; ++t) k.push_back(s.h.coeff(t).v);
  return k;
}

}  // namespace decomp

#endif  // DECOMP_ORACLE_HPP
