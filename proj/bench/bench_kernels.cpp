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

// Serial versus OpenMP timings for the elimination and oracle kernels.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "decomp/linear_solve.hpp"
#include "decomp/oracle.hpp"

using namespace decomp;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  PrimeField f(1000003);
  Rng rng(1);
  for (std::size_t n : {64, 128, 256}) {
    Matrix<Fp> a(n, n, f.zero());
    std::vector<Fp> b(n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = f.sample(f.modulus(), rng);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = f.sample(f.modulus(), rng);
    }
    SolveResult<Fp> rs, rp;
    const double ts = seconds([&] { rs = gauss_solve_field(f, a, b, Kernel::Serial); }, 3);
    const double tp = seconds([&] { rp = gauss_solve_field(f, a, b, Kernel::Parallel); }, 3);
    std::printf("gauss n=%zu serial %.4fs parallel %.4fs agree=%d\n", n, ts, tp, rs.x == rp.x ? 1 : 0);
  }
  PrimeField f31(31);
  InterpolationInstance<PrimeField> inst{f31, 2, 3, {}, {}};
  for (int i = 1; i <= 4; ++i) {
    inst.alpha.push_back(f31.from_int(i));
    inst.beta.push_back(f31.from_int(3 * i + 1));
  }
  OracleResult os, op;
  const double ts = seconds([&] { os = brute_force_interpolants(inst, Kernel::Serial); }, 1);
  const double tp = seconds([&] { op = brute_force_interpolants(inst, Kernel::Parallel); }, 1);
  std::printf("oracle p=31 d=2 e=3 serial %.4fs parallel %.4fs agree=%d\n", ts, tp,
              os.solutions == op.solutions ? 1 : 0);
  return 0;
}
