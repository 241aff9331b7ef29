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

#ifndef DECOMP_REPORT_HPP
#define DECOMP_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "decomp/extension.hpp"
#include "decomp/field.hpp"
#include "decomp/homotopy.hpp"
#include "decomp/oracle.hpp"
#include "decomp/special_interp.hpp"

namespace decomp {

using Json = nlohmann::json;

inline Json element_json(const RationalField&, const Rational& a) { return a.to_string(); }
inline Json element_json(const PrimeField&, const Fp& a) { return a.v; }
template <Field Base>
Json element_json(const ExtensionField<Base>& k, const typename ExtensionField<Base>::Element& a) {
  Json arr = Json::array();
  for (const auto& c : a.coeffs()) arr.push_back(element_json(k.base(), c));
  return arr;
}

/// Ascending coefficient list including the leading 1.
template <Field F>
Json poly_json(const Polynomial<F>& p, std::size_t degree) {
  Json arr = Json::array();
  for (std::size_t i = 0; i <= degree; ++i) arr.push_back(element_json(p.field(), p.coeff(i)));
  return arr;
}

template <Field F>
Json solution_json(const Interpolant<F>& s) {
  const auto d = static_cast<std::size_t>(s.g.degree()), e = static_cast<std::size_t>(s.h.degree());
  return Json{{"field", s.g.field().name()}, {"g", poly_json(s.g, d)}, {"h", poly_json(s.h, e)}};
}

template <Field F>
Json extension_json(const ExtensionAnswer<F>& a) {
  Json j = solution_json(a.solution);
  j["extension_modulus"] = poly_json(a.field.modulus(), a.field.degree());
  return j;
}

template <Field F>
Json special_report(const SpecialResult<F>& r) {
  Json sols = Json::array(), refs = Json::array();
  bool singular = false;
  for (const auto& o : r.outcomes) {
    Json entry{{"partition", o.partition.to_string()}};
    if (o.solution) {
      entry["status"] = "solved";
      sols.push_back(solution_json(*o.solution));
    } else {
      entry["status"] = to_string(*o.failure);
      singular = true;
    }
    refs.push_back(std::move(entry));
  }
  return Json{{"status", singular ? "non_generic" : "solved"}, {"solutions", sols}, {"refinements", refs}};
}

inline Json oracle_report(const OracleResult& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_json(s));
  return Json{{"status", "solved"}, {"count", r.count}, {"enumerated", r.enumerated}, {"solutions", sols}};
}

inline Json transcript_json(const Transcript& t) {
  Json attempts = Json::array(), draws = Json::array(), guesses = Json::array();
  for (const auto& a : t.attempts) {
    draws.push_back(a.lambda);
    Json rec{{"start", a.start_index}, {"lambda", a.lambda}, {"D_guess", a.D_guess}, {"delta_guess", a.delta_guess},
             {"M", a.M}, {"N", a.N}, {"outcome", a.outcome}};
    if (a.outcome == "ok") {
      rec["k"] = a.k;
      rec["m_prime"] = a.m_prime;
      rec["deg_m1"] = a.deg_m1;
      rec["parametrization"] = a.formula;
      guesses.push_back({a.D_guess, a.delta_guess});
    }
    attempts.push_back(std::move(rec));
  }
  return Json{{"attempts", attempts}, {"lambda_draws", draws}, {"guesses", guesses}, {"deg_m1", t.deg_m1},
              {"paths", t.paths},     {"diagnostics", t.diagnostics}, {"advisories", t.advisories}};
}

template <Field F>
Json solve_report(const HomotopyResult<F>& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_json(s));
  for (const auto& x : r.extensions) sols.push_back(extension_json(x));
  Json j{{"status", to_string(r.status)}, {"solutions", sols}, {"transcript", transcript_json(r.transcript)}};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace decomp

#endif  // DECOMP_REPORT_HPP
