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

#ifndef DECOMP_SPECIAL_INTERP_HPP
#define DECOMP_SPECIAL_INTERP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "decomp/combinatorics.hpp"
#include "decomp/error.hpp"
#include "decomp/field.hpp"
#include "decomp/linear_solve.hpp"
#include "decomp/poly.hpp"

namespace decomp {

/// Find monic g of degree d and monic h of degree e with h(0) = 0 and
/// g(h(alpha_i)) = beta_i for all d+e-1 nodes.
template <Field F>
struct InterpolationInstance {
  F field;
  std::size_t d = 0;
  std::size_t e = 0;
  std::vector<typename F::Element> alpha;
  std::vector<typename F::Element> beta;

  std::size_t num_points() const { return d + e - 1; }

  /// Shape checks and distinct nodes.
  void validate() const {
    if (d < 2 || e < 2) throw Error(ErrorCode::InvalidInstance, "d and e must both be at least 2");
    if (alpha.size() != d + e - 1 || beta.size() != d + e - 1) {
      throw Error(ErrorCode::InvalidInstance, "expected " + std::to_string(d + e - 1) + " alpha and beta values, got " +
                                                  std::to_string(alpha.size()) + " and " + std::to_string(beta.size()));
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      for (std::size_t j = i + 1; j < alpha.size(); ++j) {
        if (alpha[i] == alpha[j]) {
          throw Error(ErrorCode::DuplicateNodes,
                      "alpha_" + std::to_string(i + 1) + " equals alpha_" + std::to_string(j + 1));
        }
      }
    }
  }

  InterpolationInstance with_zero_beta() const {
    InterpolationInstance r = *this;
    r.beta.assign(alpha.size(), field.zero());
    return r;
  }
};

template <Field F>
struct Interpolant {
  Polynomial<F> g;
  Polynomial<F> h;

  friend bool operator==(const Interpolant&, const Interpolant&) = default;
};

/// (g o h)(alpha_i) = beta_i for every i, plus the normal form of g and h.
template <Field F>
bool verify_interpolant(const InterpolationInstance<F>& inst, const Interpolant<F>& s) {
  if (s.g.degree() != static_cast<int>(inst.d) || !s.g.is_monic()) return false;
  if (s.h.degree() != static_cast<int>(inst.e) || !s.h.is_monic()) return false;
  if (!inst.field.is_zero(s.h.coeff(0))) return false;
  for (std::size_t i = 0; i < inst.alpha.size(); ++i) {
    if (!(eval(s.g, eval(s.h, inst.alpha[i])) == inst.beta[i])) return false;
  }
  return true;
}

/// Builds h from the block equations h(alpha_j) = h(alpha_rep) and then g by
/// monic interpolation through (h(alpha_rep), beta_rep), one point per block.
template <Field F>
Interpolant<F> solve_for_refinement(const InterpolationInstance<F>& inst, const SetPartition& p) {
  const F& f = inst.field;
  const std::size_t d = inst.d, e = inst.e;
  if (p.ground_size() != inst.num_points() || p.num_blocks() != d || !p.refines(partition_of_values(inst.beta))) {
    throw Error(ErrorCode::RefinementMismatch, p.to_string() + " is not a " + std::to_string(d) +
                                                   "-refinement of the partition of beta");
  }
  const auto& a = inst.alpha;
  Matrix<typename F::Element> m(e - 1, e - 1, f.zero());
  std::vector<typename F::Element> rhs;
  std::size_t row = 0;
  for (const auto& block : p.blocks()) {
    const auto& rep = a[block.front()];
    for (std::size_t idx = 1; idx < block.size(); ++idx) {
      const auto& aj = a[block[idx]];
      auto pr = rep, pj = aj;
      for (std::size_t t = 1; t < e; ++t) {
        m(row, t - 1) = pr - pj;
        pr = pr * rep;
        pj = pj * aj;
      }
      rhs.push_back(pj - pr);
      ++row;
    }
  }
  auto sol = gauss_solve_field(f, m, rhs);
  if (sol.status != SolveStatus::Solved || sol.rank != e - 1) {
    throw Error(ErrorCode::SingularSystem, "block system for " + p.to_string() + " is singular");
  }
  std::vector<typename F::Element> hc(e + 1, f.zero());
  for (std::size_t t = 1; t < e; ++t) hc[t] = sol.x[t - 1];
  hc[e] = f.one();
  Polynomial<F> h(f, std::move(hc));
  std::vector<std::pair<typename F::Element, typename F::Element>> pts;
  for (const auto& block : p.blocks()) pts.emplace_back(eval(h, a[block.front()]), inst.beta[block.front()]);
  Polynomial<F> g(f);
  try {
    g = interpolate_monic(f, pts);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DuplicateNodes) throw;
    throw Error(ErrorCode::SingularSystem, "h takes equal values on two blocks of " + p.to_string());
  }
  Interpolant<F> out{std::move(g), std::move(h)};
  if (!verify_interpolant(inst, out)) throw Error(ErrorCode::Fail, "special solution failed verification");
  return out;
}

template <Field F>
struct RefinementOutcome {
  SetPartition partition;
  std::optional<Interpolant<F>> solution;
  std::optional<ErrorCode> failure;  // set iff solution is empty
};

template <Field F>
struct SpecialResult {
  std::vector<RefinementOutcome<F>> outcomes;

  std::vector<Interpolant<F>> solutions() const {
    std::vector<Interpolant<F>> out;
    for (const auto& o : outcomes) {
      if (o.solution) out.push_back(*o.solution);
    }
    return out;
  }
  bool all_solved() const {
    for (const auto& o : outcomes) {
      if (!o.solution) return false;
    }
    return true;
  }
};

/// One outcome per d-refinement of the partition of beta, in
/// restricted-growth-string order.
template <Field F>
SpecialResult<F> solve_special_all(const InterpolationInstance<F>& inst) {
  inst.validate();
  const auto pb = partition_of_values(inst.beta);
  if (pb.num_blocks() > inst.d) {
    throw Error(ErrorCode::BetaTooGeneric, "beta takes " + std::to_string(pb.num_blocks()) +
                                               " distinct values, more than d = " + std::to_string(inst.d));
  }
  SpecialResult<F> result;
  for (auto& p : enumerate_m_refinements(pb, inst.d)) {
    RefinementOutcome<F> o{p, std::nullopt, std::nullopt};
    try {
      o.solution = solve_for_refinement(inst, p);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::SingularSystem) throw;
      o.failure = err.code();
    }
    result.outcomes.push_back(std::move(o));
  }
  return result;
}

/// The partition {{1..e},{e+1},...,{d+e-1}} used for the start point.
inline SetPartition start_partition(std::size_t d, std::size_t e) {
  std::vector<std::vector<std::size_t>> blocks(1);
  for (std::size_t i = 0; i < e; ++i) blocks[0].push_back(i);
  for (std::size_t i = e; i < d + e - 1; ++i) blocks.push_back({i});
  return SetPartition(std::move(blocks));
}

/// A solution of the beta = 0 instance on the same nodes.
template <Field F>
Interpolant<F> initial_point(const InterpolationInstance<F>& inst) {
  inst.validate();
  return solve_for_refinement(inst.with_zero_beta(), start_partition(inst.d, inst.e));
}

}  // namespace decomp

#endif  // DECOMP_SPECIAL_INTERP_HPP
