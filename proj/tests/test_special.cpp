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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "decomp/combinatorics.hpp"
#include "decomp/oracle.hpp"
#include "decomp/special_interp.hpp"
#include "support.hpp"

using namespace decomp;
using testing::q;

namespace {

using QP = Polynomial<RationalField>;
using FP = Polynomial<PrimeField>;

InterpolationInstance<RationalField> quartic_instance() {
  return {RationalField{}, 2, 2, testing::qs({5, 6, 7}), testing::qs({3, 3, 3})};
}

InterpolationInstance<ExtensionField<PrimeField>> gf4_instance() {
  const auto k = gf4();
  const auto y1 = k.generator() + k.one();
  return {k, 2, 2, {k.zero(), k.one(), k.generator()}, {y1, y1, y1}};
}

SetPartition part(std::vector<std::vector<std::size_t>> one_based) {
  for (auto& b : one_based)
    for (auto& i : b) --i;
  return SetPartition(one_based);
}

std::vector<Rational> triple(const Interpolant<RationalField>& s) { return {s.g.coeff(1), s.g.coeff(0), s.h.coeff(1)}; }

InterpolationInstance<PrimeField> random_zero_instance(const PrimeField& f, std::size_t d, std::size_t e, Rng& rng) {
  InterpolationInstance<PrimeField> inst{f, d, e, testing::distinct_nodes(f, d + e - 1, rng), {}};
  inst.beta.assign(d + e - 1, f.zero());
  return inst;
}

// For beta = 0: every h whose values on the nodes take exactly d distinct
// values v_1..v_d gives the single solution g = prod (X - v_k).
std::set<std::vector<std::uint64_t>> zero_beta_solutions(const InterpolationInstance<PrimeField>& inst) {
  const PrimeField& f = inst.field;
  const std::uint64_t p = f.modulus();
  const std::size_t e = inst.e;
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> hd(e - 1, 0);
  while (true) {
    std::vector<std::uint64_t> vals;
    for (const auto& a : inst.alpha) {
      Fp v = power(f, a, e);
      for (std::size_t t = 1; t < e; ++t) v = v + f.from_uint(hd[t - 1]) * power(f, a, t);
      if (std::find(vals.begin(), vals.end(), v.v) == vals.end()) vals.push_back(v.v);
    }
    REQUIRE(vals.size() >= inst.d);
    if (vals.size() == inst.d) {
      FP g = FP::constant(f, f.one());
      for (auto v : vals) g = g * FP(f, {-f.from_uint(v), f.one()});
      std::vector<std::uint64_t> key;
      for (std::size_t k = 0; k < inst.d; ++k) key.push_back(g.coeff(k).v);
      key.insert(key.end(), hd.begin(), hd.end());
      out.insert(key);
    }
    std::size_t pos = 0;
    while (pos < hd.size() && ++hd[pos] == p) hd[pos++] = 0;
    if (pos == hd.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("refinement solutions of the quartic instance") {
  const auto inst = quartic_instance();
  CHECK(triple(solve_for_refinement(inst, part({{1, 2}, {3}}))) == testing::qs({58, 843, -11}));
  CHECK(triple(solve_for_refinement(inst, part({{1, 3}, {2}}))) == testing::qs({71, 1263, -12}));
  CHECK(triple(solve_for_refinement(inst, part({{1}, {2, 3}}))) == testing::qs({82, 1683, -13}));
}

TEST_CASE("all special solutions of the quartic instance") {
  const auto inst = quartic_instance();
  const auto r = solve_special_all(inst);
  REQUIRE(r.all_solved());
  const auto sols = r.solutions();
  REQUIRE(sols.size() == 3);
  RationalField f;
  CHECK(compose(sols[0].g, sols[0].h) == QP::from_ints(f, {843, -638, 179, -22, 1}));
  CHECK(compose(sols[1].g, sols[1].h) == QP::from_ints(f, {1263, -852, 215, -24, 1}));
  CHECK(compose(sols[2].g, sols[2].h) == QP::from_ints(f, {1683, -1066, 251, -26, 1}));
  for (const auto& s : sols) {
    for (std::size_t i = 0; i < 3; ++i) CHECK(testing::eval_by_powers(compose(s.g, s.h), inst.alpha[i]) == q(3));
  }
}

TEST_CASE("composition collision over GF(4)") {
  const auto inst = gf4_instance();
  const auto& k = inst.field;
  const auto s = solve_for_refinement(inst, part({{1, 2}, {3}}));
  CHECK(s.g.coeff(1) == k.one());
  CHECK(s.g.coeff(0) == k.generator() + k.one());
  CHECK(s.h.coeff(1) == k.one());
  const auto r = solve_special_all(inst);
  REQUIRE(r.all_solved());
  REQUIRE(r.solutions().size() == 3);
  using KP = Polynomial<ExtensionField<PrimeField>>;
  const KP f(k, {k.generator() + k.one(), k.one(), k.zero(), k.zero(), k.one()});
  std::set<std::string> hs;
  for (const auto& sol : r.solutions()) {
    CHECK(compose(sol.g, sol.h) == f);
    hs.insert(sol.h.to_string());
  }
  CHECK(hs.size() == 3);
}

TEST_CASE("seven special solutions over F_101") {
  PrimeField f(101);
  const auto inst = InterpolationInstance<PrimeField>{f, 2, 3, testing::fps(f, {3, 17, 40, 88}), testing::fps(f, {0, 0, 0, 0})};
  const auto r = solve_special_all(inst);
  REQUIRE(r.all_solved());
  CHECK(r.solutions().size() == stirling2(4, 2));
  std::set<std::vector<std::uint64_t>> got;
  for (const auto& s : r.solutions()) got.insert(oracle_key(s, 2, 3));
  CHECK(got == zero_beta_solutions(inst));
}

TEST_CASE("start point") {
  const auto s = initial_point(quartic_instance());
  CHECK(s.g == QP::from_ints(RationalField{}, {840, 58, 1}));
  CHECK(s.h == QP::from_ints(RationalField{}, {0, -11, 1}));
  for (long a : {5, 6, 7}) CHECK(eval(s.g, eval(s.h, q(a))) == q(0));

  PrimeField f(1009);
  const InterpolationInstance<PrimeField> inst{f, 2, 3, testing::fps(f, {1, 2, 3, 4}), testing::fps(f, {5, 6, 7, 8})};
  const auto t = initial_point(inst);
  CHECK(t.g == FP::from_ints(f, {72, -18, 1}));
  CHECK(t.h == FP::from_ints(f, {0, 11, -6, 1}));
  for (const auto& a : inst.alpha) CHECK(eval(t.g, eval(t.h, a)) == f.zero());
  CHECK(start_partition(2, 3).to_string() == "{{1,2,3},{4}}");
  CHECK(start_partition(3, 2).to_string() == "{{1,2},{3},{4}}");
}

TEST_CASE("special solver errors") {
  auto inst = quartic_instance();
  try {
    (void)solve_for_refinement(inst, part({{1}, {2}, {3}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RefinementMismatch);
  }
  inst.beta = testing::qs({1, 2, 3});
  try {
    (void)solve_special_all(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BetaTooGeneric);
  }
  try {
    (void)solve_for_refinement(inst, part({{1, 2}, {3}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RefinementMismatch);
  }
  inst.alpha = testing::qs({5, 5, 7});
  try {
    (void)initial_point(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateNodes);
  }
  inst.alpha = testing::qs({5, 6});
  try {
    (void)initial_point(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInstance);
  }
}

TEST_CASE("singular block systems are reported per refinement") {
  // alpha_1 + alpha_2 = alpha_3 + alpha_4 makes the {{1,2},{3,4}} system singular.
  PrimeField f(101);
  const InterpolationInstance<PrimeField> inst{f, 2, 3, testing::fps(f, {0, 3, 1, 2}), testing::fps(f, {0, 0, 0, 0})};
  const auto r = solve_special_all(inst);
  REQUIRE(r.outcomes.size() == 7);
  std::size_t failures = 0;
  for (const auto& o : r.outcomes) {
    CHECK(o.solution.has_value() != o.failure.has_value());
    if (o.failure) {
      CHECK(*o.failure == ErrorCode::SingularSystem);
      CHECK(o.partition == part({{1, 2}, {3, 4}}));
      ++failures;
    } else {
      CHECK(verify_interpolant(inst, *o.solution));
    }
  }
  CHECK(failures == 1);
  CHECK_FALSE(r.all_solved());
}

TEST_CASE("fiber counts and validity on random instances") {
  Rng rng(41);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}};
  for (std::uint64_t p : {1009ULL, 1000003ULL}) {
    PrimeField f(p);
    for (const auto& [d, e] : shapes) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto inst = random_zero_instance(f, d, e, rng);
        const auto r = solve_special_all(inst);
        CHECK(r.outcomes.size() == stirling2(d + e - 1, d));
        std::set<std::string> hs;
        for (const auto& s : r.solutions()) {
          CHECK(verify_interpolant(inst, s));
          CHECK(s.g.degree() == static_cast<int>(d));
          CHECK(s.h.degree() == static_cast<int>(e));
          CHECK(f.is_zero(s.h.coeff(0)));
          for (std::size_t i = 0; i < inst.alpha.size(); ++i)
            CHECK(testing::eval_by_powers(compose(s.g, s.h), inst.alpha[i]) == inst.beta[i]);
          hs.insert(s.h.to_string());
        }
        CHECK(hs.size() == r.solutions().size());
        if (r.all_solved()) CHECK(r.solutions().size() == stirling2(d + e - 1, d));
      }
    }
  }
}

TEST_CASE("special solutions match exhaustive search") {
  Rng rng(42);
  for (const auto& [p, d, e] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>{
           {31, 2, 2}, {31, 2, 3}, {31, 3, 2}, {13, 3, 3}, {53, 2, 3}}) {
    PrimeField f(p);
    for (int trial = 0; trial < 3; ++trial) {
      const auto inst = random_zero_instance(f, d, e, rng);
      const auto r = solve_special_all(inst);
      if (!r.all_solved()) continue;
      std::set<std::vector<std::uint64_t>> got;
      for (const auto& s : r.solutions()) got.insert(oracle_key(s, d, e));
      CHECK(got == zero_beta_solutions(inst));
      if (p <= 31) {
        std::set<std::vector<std::uint64_t>> brute;
        for (const auto& s : brute_force_interpolants(inst).solutions) brute.insert(oracle_key(s, d, e));
        CHECK(got == brute);
      }
    }
  }
}

TEST_CASE("rational instances with repeated values") {
  Rng rng(43);
  RationalField f;
  for (int trial = 0; trial < 20; ++trial) {
    InterpolationInstance<RationalField> inst{f, 3, 2, {}, {}};
    std::set<long> used;
    std::uniform_int_distribution<long> node(-30, 30);
    while (inst.alpha.size() < 4) {
      const long a = node(rng);
      if (used.insert(a).second) inst.alpha.push_back(q(a));
    }
    inst.beta = testing::qs({2, 2, -1, 5});
    CHECK(solve_special_all(inst).outcomes.size() == 1);
    inst.beta = testing::qs({2, 2, 2, 5});
    const auto r = solve_special_all(inst);
    CHECK(r.outcomes.size() == 3);
    for (const auto& s : r.solutions()) CHECK(verify_interpolant(inst, s));
  }
}
