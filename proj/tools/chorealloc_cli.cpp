// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the solver only through the C API.
//
//   chorealloc solve  --instance FILE --criterion leximin|malfare|usw
//                     [--p P] [--output FILE] [--trace]
//   chorealloc verify --instance FILE --criterion ... [--p P] [--budget N]
//   chorealloc gen    --n N --m M [--families LIST] [--weight-skew K]
//                     [--seed S] [--output FILE]
//
// Exit codes: 0 success / PASS, 1 FAIL, 2 input error, 3 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chorealloc/chorealloc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct InstanceDeleter {
  void operator()(ca_instance* p) const { ca_instance_free(p); }
};
struct ResultDeleter {
  void operator()(ca_result* p) const { ca_result_free(p); }
};
struct ReportDeleter {
  void operator()(ca_verify_report* p) const { ca_verify_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { ca_string_free(p); }
};

using InstancePtr = std::unique_ptr<ca_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<ca_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<ca_verify_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int ExitFor(ca_status status) {
  if (status == CA_OK) return kExitPass;
  return status == CA_ERR_INTERNAL ? kExitInternal : kExitInput;
}

int ReportError(ca_status status) {
  std::cerr << "error: " << ca_status_string(status) << ": " << ca_last_error()
            << "\n";
  return ExitFor(status);
}

std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int WriteOutput(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitInput;
  }
  return kExitPass;
}

struct CriterionFlags {
  std::string instance_path;
  std::string criterion = "leximin";
  std::optional<double> p;
};

// Loads the instance and resolves the criterion; returns an exit code on
// failure.
std::optional<int> Prepare(const CriterionFlags& flags, InstancePtr& instance,
                           ca_criterion& criterion) {
  ca_status status = ca_criterion_from_name(flags.criterion.c_str(), &criterion);
  if (status != CA_OK) return ReportError(status);
  if (criterion == CA_CRITERION_MALFARE && !flags.p) {
    std::cerr << "error: p required for --criterion malfare\n";
    return kExitInput;
  }
  const std::optional<std::string> text = ReadFile(flags.instance_path);
  if (!text) {
    std::cerr << "error: cannot read " << flags.instance_path << "\n";
    return kExitInput;
  }
  ca_instance* raw = nullptr;
  status = ca_instance_from_json(text->c_str(), &raw);
  instance.reset(raw);
  if (status != CA_OK) return ReportError(status);
  return std::nullopt;
}

int RunSolve(const CriterionFlags& flags, const std::string& output,
             bool trace) {
  InstancePtr instance;
  ca_criterion criterion{};
  if (auto code = Prepare(flags, instance, criterion)) return *code;
  ca_result* raw = nullptr;
  ca_status status = ca_solve(instance.get(), criterion, flags.p.has_value(),
                              flags.p.value_or(0.0), trace ? 1 : 0, &raw);
  ResultPtr result(raw);
  if (status != CA_OK) return ReportError(status);
  char* json = nullptr;
  status = ca_result_to_json(result.get(), &json);
  StringPtr owned(json);
  if (status != CA_OK) return ReportError(status);
  return WriteOutput(output, json);
}

int RunVerify(const CriterionFlags& flags, std::uint64_t budget) {
  InstancePtr instance;
  ca_criterion criterion{};
  if (auto code = Prepare(flags, instance, criterion)) return *code;
  ca_verify_report* raw = nullptr;
  std::uint64_t required = 0;
  ca_status status =
      ca_verify(instance.get(), criterion, flags.p.has_value(),
                flags.p.value_or(0.0), budget, &required, &raw);
  ReportPtr report(raw);
  if (status == CA_ERR_BUDGET) {
    std::cerr << "error: enumeration refused, required budget " << required
              << "\n";
    return kExitInput;
  }
  if (status != CA_OK) return ReportError(status);
  char* text = nullptr;
  status = ca_verify_report_text(report.get(), &text);
  StringPtr owned(text);
  if (status != CA_OK) return ReportError(status);
  std::cout << text;
  return ca_verify_report_passed(report.get()) ? kExitPass : kExitFail;
}

int RunGen(const ca_gen_params& params, const std::string& families,
           const std::string& output) {
  ca_gen_params copy = params;
  copy.families = families.empty() ? nullptr : families.c_str();
  char* json = nullptr;
  const ca_status status = ca_generate(&copy, &json);
  StringPtr owned(json);
  if (status != CA_OK) return ReportError(status);
  return WriteOutput(output, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair allocation of chores with binary supermodular costs"};
  app.require_subcommand(1);

  CriterionFlags solve_flags;
  std::string solve_output;
  bool trace = false;
  CLI::App* solve = app.add_subcommand("solve", "Compute an allocation");
  solve->add_option("--instance", solve_flags.instance_path, "Instance document")
      ->required();
  solve->add_option("--criterion", solve_flags.criterion,
                    "leximin, malfare or usw")
      ->required();
  solve->add_option("--p", solve_flags.p, "Malfare exponent (>= 1)");
  solve->add_option("--output", solve_output, "Result path (default stdout)");
  solve->add_flag("--trace", trace, "Include the per-iteration trace");

  CriterionFlags verify_flags;
  std::uint64_t budget = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "Compare the solver with brute force");
  verify->add_option("--instance", verify_flags.instance_path,
                     "Instance document")
      ->required();
  verify->add_option("--criterion", verify_flags.criterion,
                     "leximin, malfare or usw")
      ->required();
  verify->add_option("--p", verify_flags.p, "Malfare exponent (>= 1)");
  verify->add_option("--budget", budget,
                     "Maximum number of allocations to enumerate");

  ca_gen_params gen_params{2, 3, nullptr, 1, 0};
  std::string families;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_params.num_agents, "Number of agents")->required();
  gen->add_option("--m", gen_params.num_chores, "Number of chores")->required();
  gen->add_option("--families", families,
                  "Comma-separated cost families "
                  "(approval_cap,partition_cap,explicit)");
  gen->add_option("--weight-skew", gen_params.weight_skew,
                  "Weights are a/b with a, b in [1, skew]");
  gen->add_option("--seed", gen_params.seed, "Random seed");
  gen->add_option("--output", gen_output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*solve) return RunSolve(solve_flags, solve_output, trace);
  if (*verify) return RunVerify(verify_flags, budget);
  return RunGen(gen_params, families, gen_output);
}
