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

#include "support.hpp"

using namespace decomp;
using testing::q;

namespace {

using QP = Polynomial<RationalField>;

QP qpoly(std::initializer_list<std::int64_t> c) { return QP::from_ints(RationalField{}, c); }

template <Field F>
void check_compose_properties(const F& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> deg(1, 4);
    const auto g = testing::random_poly(f, deg(rng), rng), h = testing::random_poly(f, deg(rng), rng);
    const auto gh = compose(g, h);
    CHECK(gh.degree() == g.degree() * h.degree());
    CHECK(gh == testing::compose_by_powers(g, h));
    const auto x = testing::random_element(f, rng);
    CHECK(eval(gh, x) == eval(g, eval(h, x)));
    CHECK(eval(gh, x) == testing::eval_by_powers(gh, x));
  }
}

}  // namespace

TEST_CASE("composition of the quartic through (5,3), (6,3), (7,3)") {
  const auto f = compose(qpoly({843, 58, 1}), qpoly({0, -11, 1}));
  CHECK(f == qpoly({843, -638, 179, -22, 1}));
  CHECK(eval(f, q(6)) == q(3));
  CHECK(testing::eval_by_powers(f, q(6)) == q(3));
  const auto h = qpoly({0, -11, 1});
  CHECK(compose(QP::x(RationalField{}), h) == h);
}

TEST_CASE("composition collision over GF(4)") {
  const auto k = gf4();
  const auto y = k.generator();
  using KP = Polynomial<ExtensionField<PrimeField>>;
  const KP g(k, {y + k.one(), k.one(), k.one()}), h(k, {k.zero(), k.one(), k.one()});
  const KP expect(k, {y + k.one(), k.one(), k.zero(), k.zero(), k.one()});
  CHECK(compose(g, h) == expect);
}

TEST_CASE("evaluation") {
  CHECK(eval(qpoly({0, -11, 1}), q(5)) == q(-30));
  CHECK(eval(QP(RationalField{}), q(7)) == q(0));
}

TEST_CASE("monic interpolation") {
  RationalField f;
  CHECK(interpolate_monic(f, {{q(-30), q(3)}, {q(-28), q(3)}}) == qpoly({843, 58, 1}));
  CHECK(interpolate_monic(f, {{q(0), q(0)}, {q(1), q(1)}}) == qpoly({0, 0, 1}));
  CHECK(interpolate_monic(f, {{q(-30), q(0)}, {q(-28), q(0)}}) == qpoly({840, 58, 1}));
  try {
    (void)interpolate_monic(f, {{q(1), q(0)}, {q(1), q(2)}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateNodes);
  }
}

TEST_CASE("derivative, gcd and modular inverse") {
  CHECK(derivative(qpoly({843, 58, 1})) == qpoly({58, 2}));
  CHECK(gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
  PrimeField f13(13);
  using FP = Polynomial<PrimeField>;
  const auto m = FP::from_ints(f13, {1, 0, 1});
  const auto u = mod_inverse(FP::x(f13), m);
  CHECK(u == FP::from_ints(f13, {0, 12}));
  CHECK((FP::x(f13) * u) % m == FP::constant(f13, f13.one()));
  try {
    (void)mod_inverse(FP::from_ints(f13, {1, 1}), FP::from_ints(f13, {-1, 0, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
  PrimeField f3(3);
  CHECK(derivative(FP::from_ints(f3, {1, 0, 0, 1})).is_zero());
}

TEST_CASE("polynomials over different fields do not mix") {
  PrimeField a(5), b(7);
  try {
    (void)(Polynomial<PrimeField>::x(a) + Polynomial<PrimeField>::x(b));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DescriptorMismatch);
  }
}

TEST_CASE("composition degree and pointwise evaluation") {
  check_compose_properties(RationalField{}, 1);
  check_compose_properties(PrimeField(101), 2);
  check_compose_properties(PrimeField(1000003), 3);
  check_compose_properties(gf4(), 4);
}

TEST_CASE("interpolation output is monic and hits all nodes") {
  Rng rng(21);
  PrimeField f(1009);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dd(1, 6);
    const std::size_t d = dd(rng);
    const auto xs = testing::distinct_nodes(f, d, rng);
    std::vector<std::pair<Fp, Fp>> pts;
    for (const auto& x : xs) pts.emplace_back(x, testing::random_element(f, rng));
    const auto g = interpolate_monic(f, pts);
    CHECK(g.degree() == static_cast<int>(d));
    CHECK(g.is_monic());
    for (const auto& [x, y] : pts) CHECK(eval(g, x) == y);
  }
}

TEST_CASE("modular inverses multiply to one") {
  Rng rng(22);
  for (std::uint64_t p : {2ULL, 13ULL, 1009ULL}) {
    PrimeField f(p);
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = testing::random_poly(f, 1 + trial % 7, rng);
      const auto a = testing::random_poly(f, trial % 9, rng);
      try {
        const auto u = mod_inverse(a, m);
        CHECK(u.degree() < m.degree());
        CHECK(((a * u) % m) == Polynomial<PrimeField>::constant(f, f.one()));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCoprime);
        CHECK(gcd(a, m).degree() > 0);
      }
    }
  }
}

TEST_CASE("division identity") {
  Rng rng(23);
  RationalField f;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_poly(f, trial % 8, rng), b = testing::random_poly(f, trial % 5, rng);
    const auto [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
}
