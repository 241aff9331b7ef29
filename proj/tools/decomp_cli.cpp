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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "decomp/combinatorics.hpp"
#include "decomp/descriptor.hpp"
#include "decomp/homotopy.hpp"
#include "decomp/oracle.hpp"
#include "decomp/report.hpp"
#include "decomp/special_interp.hpp"

namespace {

using namespace decomp;

constexpr int kExitSolved = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitNonGeneric = 3;

struct JobSpec {
  std::string field = "q";
  std::size_t d = 0, e = 0;
  std::string alpha, beta;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> sample_bound;
  std::size_t max_lambda_retries = 8;
  std::size_t max_doublings = 12;
  std::string output;
  bool timings = false;
  std::size_t n = 0, k = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <Field F>
InterpolationInstance<F> make_instance(const F& f, const JobSpec& job) {
  InterpolationInstance<F> inst{f, job.d, job.e, {}, {}};
  for (const auto& t : split_list(job.alpha)) inst.alpha.push_back(f.parse(t));
  if (job.beta.empty()) {
    inst.beta.assign(inst.alpha.size(), f.zero());
  } else {
    for (const auto& t : split_list(job.beta)) inst.beta.push_back(f.parse(t));
  }
  inst.validate();
  return inst;
}

int status_exit(const std::string& status) {
  if (status == "solved") return kExitSolved;
  if (status == "non_generic") return kExitNonGeneric;
  return kExitFail;
}

int run_special(const JobSpec& job, Json& out) {
  const auto fd = parse_field(job.field);
  return std::visit(
      [&](const auto& f) {
        const auto inst = make_instance(f, job);
        try {
          out = special_report(solve_special_all(inst));
        } catch (const Error& err) {
          if (err.code() != ErrorCode::BetaTooGeneric) throw;
          out = Json{{"status", "fail"}, {"solutions", Json::array()}, {"message", err.what()}};
        }
        return status_exit(out["status"]);
      },
      fd);
}

int run_solve(const JobSpec& job, Json& out) {
  const auto fd = parse_field(job.field);
  return std::visit(
      [&](const auto& f) -> int {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ExtensionField<PrimeField>>) {
          throw UsageError("solve supports q and fp:<p> fields only");
        } else {
          const auto inst = make_instance(f, job);
          SolveConfig cfg{job.seed, job.sample_bound, job.max_lambda_retries, job.max_doublings};
          const auto t0 = std::chrono::steady_clock::now();
          const auto res = solve(inst, cfg);
          out = solve_report(res);
          if (job.timings) {
            out["transcript"]["elapsed"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          }
          return status_exit(out["status"]);
        }
      },
      fd);
}

int run_oracle(const JobSpec& job, Json& out) {
  const auto fd = parse_field(job.field);
  const auto* f = std::get_if<PrimeField>(&fd);
  if (!f) throw UsageError("oracle supports fp:<p> fields only");
  out = oracle_report(brute_force_interpolants(make_instance(*f, job)));
  return kExitSolved;
}

int run_stirling(const JobSpec& job, Json& out) {
  out = Json{{"status", "solved"}, {"n", job.n}, {"k", job.k}, {"value", stirling2(job.n, job.k).get_str()}};
  return kExitSolved;
}

void add_instance_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--field", job.field, "q, fp:<p> or ext:<p>:<c0,...,1>")->required();
  sub->add_option("--d", job.d, "degree of g")->required();
  sub->add_option("--e", job.e, "degree of h")->required();
  sub->add_option("--alpha", job.alpha, "comma-separated nodes")->required();
  sub->add_option("--beta", job.beta, "comma-separated values (default all zero)");
  sub->add_option("--output", job.output, "write the report here instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposable polynomial interpolation"};
  app.require_subcommand(1);
  JobSpec job;
  auto* solve_cmd = app.add_subcommand("solve", "homotopy solver");
  add_instance_options(solve_cmd, job);
  solve_cmd->add_option("--seed", job.seed, "random seed");
  solve_cmd->add_option("--sample-bound", job.sample_bound, "size of the set lambda is drawn from");
  solve_cmd->add_option("--max-lambda-retries", job.max_lambda_retries, "redraws per precision guess");
  solve_cmd->add_option("--max-doublings", job.max_doublings, "precision guess doublings");
  solve_cmd->add_flag("--timings", job.timings, "include elapsed seconds in the transcript");
  auto* special_cmd = app.add_subcommand("special", "linear-algebra solver for beta with at most d values");
  add_instance_options(special_cmd, job);
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search over a prime field");
  add_instance_options(oracle_cmd, job);
  auto* stirling_cmd = app.add_subcommand("stirling", "Stirling number of the second kind");
  stirling_cmd->add_option("--n", job.n)->required();
  stirling_cmd->add_option("--k", job.k)->required();
  stirling_cmd->add_option("--output", job.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  Json report;
  int rc = kExitUsage;
  try {
    if (*solve_cmd) rc = run_solve(job, report);
    if (*special_cmd) rc = run_special(job, report);
    if (*oracle_cmd) rc = run_oracle(job, report);
    if (*stirling_cmd) rc = run_stirling(job, report);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::Fail:
      case ErrorCode::NoVerifiedSolution:
      case ErrorCode::NoSolutionWithinCaps:
        std::cerr << "fail: " << err.what() << "\n";
        return kExitFail;
      case ErrorCode::SingularJacobian:
      case ErrorCode::NonGenericInput:
        std::cerr << "non-generic input: " << err.what() << "\n";
        return kExitNonGeneric;
      default:
        std::cerr << "usage error: " << err.what() << "\n";
        return kExitUsage;
    }
  }
  const std::string text = report.dump(2) + "\n";
  if (job.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(job.output);
    if (!f) {
      std::cerr << "cannot write " << job.output << "\n";
      return kExitUsage;
    }
    f << text;
  }
  return rc;
}
