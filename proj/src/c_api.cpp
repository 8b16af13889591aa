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

#include "chorealloc/chorealloc.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "chorealloc/commands.hpp"
#include "chorealloc/io.hpp"

struct ca_instance {
  chorealloc::Instance instance;
};

struct ca_result {
  chorealloc::ResultDocument document;
};

struct ca_verify_report {
  chorealloc::VerifyReport report;
};

namespace {

using chorealloc::ErrorKind;

thread_local std::string last_error;

ca_status StatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return CA_ERR_PARSE;
    case ErrorKind::kValidation:
    case ErrorKind::kMalformedAllocation:
    case ErrorKind::kMalformedTable:
      return CA_ERR_VALIDATION;
    case ErrorKind::kDomain:
    case ErrorKind::kConfiguration:
    case ErrorKind::kContractViolation:
      return CA_ERR_INVALID_ARGUMENT;
    case ErrorKind::kBudgetExceeded:
      return CA_ERR_BUDGET;
    case ErrorKind::kOracleContract:
    case ErrorKind::kInternal:
      return CA_ERR_INTERNAL;
  }
  return CA_ERR_INTERNAL;
}

ca_status Report(ca_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Body>
ca_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return CA_OK;
  } catch (const chorealloc::Error& e) {
    return Report(StatusFor(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return Report(CA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Report(CA_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

chorealloc::CriterionKind KindOf(ca_criterion criterion) {
  switch (criterion) {
    case CA_CRITERION_LEXIMIN:
      return chorealloc::CriterionKind::kLeximin;
    case CA_CRITERION_MALFARE:
      return chorealloc::CriterionKind::kMalfare;
    case CA_CRITERION_USW:
      return chorealloc::CriterionKind::kUsw;
  }
  chorealloc::Fail(ErrorKind::kConfiguration, "unknown criterion");
}

std::optional<double> ExponentOf(int has_p, double p) {
  if (!has_p) return std::nullopt;
  return p;
}

}  // namespace

extern "C" {

const char* ca_status_string(ca_status status) {
  switch (status) {
    case CA_OK:
      return "ok";
    case CA_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CA_ERR_PARSE:
      return "parse error";
    case CA_ERR_VALIDATION:
      return "validation error";
    case CA_ERR_BUDGET:
      return "enumeration budget exceeded";
    case CA_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ca_last_error(void) { return last_error.c_str(); }

void ca_string_free(char* text) { std::free(text); }

ca_status ca_criterion_from_name(const char* name, ca_criterion* out) {
  if (name == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  const auto kind = chorealloc::ParseCriterionKind(name);
  if (!kind) {
    return Report(CA_ERR_INVALID_ARGUMENT,
                  std::string("unknown criterion \"") + name + "\"");
  }
  switch (*kind) {
    case chorealloc::CriterionKind::kLeximin:
      *out = CA_CRITERION_LEXIMIN;
      break;
    case chorealloc::CriterionKind::kMalfare:
      *out = CA_CRITERION_MALFARE;
      break;
    case chorealloc::CriterionKind::kUsw:
      *out = CA_CRITERION_USW;
      break;
  }
  return CA_OK;
}

ca_status ca_instance_from_json(const char* text, ca_instance** out) {
  if (text == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return Guard([&] {
    *out = new ca_instance{chorealloc::ParseInstance(text)};
  });
}

ca_status ca_instance_to_json(const ca_instance* instance, char** out) {
  if (instance == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(chorealloc::SerializeInstance(instance->instance));
  });
}

size_t ca_instance_num_agents(const ca_instance* instance) {
  return instance ? instance->instance.num_agents() : 0;
}

size_t ca_instance_num_chores(const ca_instance* instance) {
  return instance ? instance->instance.num_chores() : 0;
}

void ca_instance_free(ca_instance* instance) { delete instance; }

ca_status ca_solve(const ca_instance* instance, ca_criterion criterion,
                   int has_p, double p, int include_trace, ca_result** out) {
  if (instance == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return Guard([&] {
    *out = new ca_result{chorealloc::Solve(instance->instance, KindOf(criterion),
                                           ExponentOf(has_p, p),
                                           include_trace != 0)};
  });
}

ca_status ca_result_to_json(const ca_result* result, char** out) {
  if (result == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(chorealloc::SerializeResult(result->document));
  });
}

size_t ca_result_clean_size(const ca_result* result) {
  return result ? result->document.clean_size : 0;
}

int64_t ca_result_agent_cost(const ca_result* result, size_t agent) {
  if (result == nullptr || agent >= result->document.agents.size()) return -1;
  return -result->document.agents[agent].utility;
}

void ca_result_free(ca_result* result) { delete result; }

ca_status ca_verify(const ca_instance* instance, ca_criterion criterion,
                    int has_p, double p, uint64_t max_allocations,
                    uint64_t* required_budget, ca_verify_report** out) {
  if (instance == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  chorealloc::EnumerationBudget budget;
  if (max_allocations != 0) budget.max_allocations = max_allocations;
  return Guard([&] {
    try {
      *out = new ca_verify_report{chorealloc::Verify(
          instance->instance, KindOf(criterion), ExponentOf(has_p, p), budget)};
    } catch (const chorealloc::BudgetExceeded& e) {
      if (required_budget != nullptr) *required_budget = e.required();
      throw;
    }
  });
}

int ca_verify_report_passed(const ca_verify_report* report) {
  return report != nullptr && report->report.passed ? 1 : 0;
}

ca_status ca_verify_report_text(const ca_verify_report* report, char** out) {
  if (report == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return Guard([&] { *out = CopyString(report->report.ToText()); });
}

void ca_verify_report_free(ca_verify_report* report) { delete report; }

ca_status ca_generate(const ca_gen_params* params, char** out) {
  if (params == nullptr || out == nullptr) {
    return Report(CA_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return Guard([&] {
    chorealloc::GeneratorOptions options;
    options.num_agents = params->num_agents;
    options.num_chores = params->num_chores;
    options.weight_skew = params->weight_skew == 0 ? 1 : params->weight_skew;
    options.seed = params->seed;
    if (params->families != nullptr) {
      options.families.clear();
      std::string list = params->families;
      std::size_t start = 0;
      while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::size_t end = comma == std::string::npos ? list.size() : comma;
        if (end > start) options.families.push_back(list.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    *out = CopyString(
        chorealloc::SerializeInstance(chorealloc::GenerateInstance(options)));
  });
}

}  // extern "C"
