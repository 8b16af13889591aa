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

#include "chorealloc/io.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "json.hpp"

namespace chorealloc {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void ParseFail(const std::string& path, const std::string& what) {
  Fail(ErrorKind::kParse, path + ": " + what);
}

[[noreturn]] void InvalidField(const std::string& path,
                               const std::string& what) {
  Fail(ErrorKind::kValidation, path + ": " + what);
}

const Json& Field(const Json& object, const char* key,
                  const std::string& path) {
  if (!object.is_object()) ParseFail(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) ParseFail(path + "." + key, "missing field");
  return *it;
}

const Json& Array(const Json& value, const std::string& path) {
  if (!value.is_array()) ParseFail(path, "expected an array");
  return value;
}

std::string String(const Json& value, const std::string& path) {
  if (!value.is_string()) ParseFail(path, "expected a string");
  return value.get<std::string>();
}

std::int64_t Integer(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) ParseFail(path, "expected an integer");
  return value.get<std::int64_t>();
}

std::size_t Count(const Json& value, const std::string& path) {
  const std::int64_t v = Integer(value, path);
  if (v < 0) ParseFail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Rational RationalField(const Json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    ParseFail(path, "expected a rational string \"num/den\" or an integer");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const Error& e) {
    ParseFail(path, e.what());
  }
}

Json ScalarToJson(const Scalar& value) {
  if (value.is_exact()) return FormatRational(value.exact());
  return value.ToDouble();
}

Scalar ScalarFromJson(const Json& value, const std::string& path) {
  if (value.is_string()) return Scalar(RationalField(value, path));
  if (value.is_number()) return Scalar(value.get<double>());
  ParseFail(path, "expected a rational string or a number");
}

void CheckVersion(const Json& root) {
  const Json& version = Field(root, "version", "$");
  if (Integer(version, "$.version") != kDocumentVersion) {
    InvalidField("$.version", "unsupported document version");
  }
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    Fail(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
}

class LabelIndex {
 public:
  explicit LabelIndex(const std::vector<std::string>& labels) {
    for (std::size_t o = 0; o < labels.size(); ++o) index_[labels[o]] = o;
  }

  std::size_t Find(const std::string& label, const std::string& path) const {
    auto it = index_.find(label);
    if (it == index_.end()) InvalidField(path, "unknown chore \"" + label + "\"");
    return it->second;
  }

  ChoreSet SetFromArray(const Json& value, const std::string& path) const {
    ChoreSet set(index_.size());
    const Json& array = Array(value, path);
    for (std::size_t k = 0; k < array.size(); ++k) {
      const std::string item_path = path + "[" + std::to_string(k) + "]";
      const std::size_t o = Find(String(array[k], item_path), item_path);
      if (set.test(o)) InvalidField(item_path, "chore listed twice");
      set.set(o);
    }
    return set;
  }

 private:
  std::map<std::string, std::size_t> index_;
};

Json LabelsOf(const Instance& instance, const ChoreSet& set) {
  Json out = Json::array();
  for (std::size_t o : Members(set)) out.push_back(instance.label(o));
  return out;
}

std::shared_ptr<const CostOracle> ParseCost(const Json& cost,
                                            const std::vector<std::string>& labels,
                                            const LabelIndex& index,
                                            const std::string& path) {
  const std::size_t m = labels.size();
  const std::string family = String(Field(cost, "family", path), path + ".family");
  if (family == "approval_cap") {
    ChoreSet approved =
        index.SetFromArray(Field(cost, "approved", path), path + ".approved");
    const std::int64_t cap = Integer(Field(cost, "cap", path), path + ".cap");
    if (cap < 0) InvalidField(path + ".cap", "cap must be nonnegative");
    return std::make_shared<ApprovalCapCost>(std::move(approved), cap);
  }
  if (family == "partition_cap") {
    const std::string categories_path = path + ".categories";
    const Json& categories =
        Array(Field(cost, "categories", path), categories_path);
    std::vector<PartitionCapCost::Category> parsed;
    ChoreSet covered(m);
    for (std::size_t j = 0; j < categories.size(); ++j) {
      const std::string item = categories_path + "[" + std::to_string(j) + "]";
      PartitionCapCost::Category category;
      category.chores =
          index.SetFromArray(Field(categories[j], "chores", item), item + ".chores");
      category.cap = Integer(Field(categories[j], "cap", item), item + ".cap");
      if (category.cap < 0) InvalidField(item + ".cap", "cap must be nonnegative");
      if (covered.intersects(category.chores)) {
        InvalidField(item + ".chores", "overlaps an earlier category");
      }
      covered |= category.chores;
      parsed.push_back(std::move(category));
    }
    return std::make_shared<PartitionCapCost>(m, std::move(parsed));
  }
  if (family == "explicit") {
    const std::string costs_path = path + ".costs";
    const Json& costs = Field(cost, "costs", path);
    if (!costs.is_object()) ParseFail(costs_path, "expected an object");
    if (m > kMaxExplicitChores) {
      InvalidField(costs_path, "explicit tables support at most " +
                                   std::to_string(kMaxExplicitChores) +
                                   " chores");
    }
    const std::size_t size = std::size_t{1} << m;
    std::vector<std::int64_t> table(size, 0);
    std::vector<bool> seen(size, false);
    for (auto it = costs.begin(); it != costs.end(); ++it) {
      const std::string entry = costs_path + "[\"" + it.key() + "\"]";
      std::uint32_t mask = 0;
      if (!it.key().empty()) {
        std::size_t start = 0;
        while (true) {
          const std::size_t comma = it.key().find(',', start);
          const std::string label = it.key().substr(
              start, comma == std::string::npos ? std::string::npos
                                                : comma - start);
          const std::uint32_t bit = 1u << index.Find(label, entry);
          if (mask & bit) InvalidField(entry, "chore listed twice");
          mask |= bit;
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      if (seen[mask]) InvalidField(entry, "subset listed twice");
      seen[mask] = true;
      table[mask] = Integer(it.value(), entry);
    }
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if (!seen[mask]) {
        InvalidField(costs_path, "incomplete table, missing subset \"" +
                                     SubsetKey(labels, mask) + "\"");
      }
    }
    if (auto violation = ValidateBinarySupermodular(m, table)) {
      InvalidField(costs_path, violation->Describe(labels));
    }
    return std::make_shared<ExplicitCost>(m, std::move(table));
  }
  InvalidField(path + ".family", "unknown cost family \"" + family + "\"");
}

Json CostToJson(const Instance& instance, const CostOracle& oracle) {
  Json out;
  out["family"] = std::string(oracle.family());
  if (auto* approval = dynamic_cast<const ApprovalCapCost*>(&oracle)) {
    out["approved"] = LabelsOf(instance, approval->approved());
    out["cap"] = approval->cap();
  } else if (auto* partition = dynamic_cast<const PartitionCapCost*>(&oracle)) {
    Json categories = Json::array();
    for (const auto& category : partition->categories()) {
      categories.push_back(
          Json{{"chores", LabelsOf(instance, category.chores)},
               {"cap", category.cap}});
    }
    out["categories"] = std::move(categories);
  } else if (auto* table = dynamic_cast<const ExplicitCost*>(&oracle)) {
    Json costs = Json::object();
    for (std::uint32_t mask = 0; mask < table->table().size(); ++mask) {
      costs[SubsetKey(instance.labels(), mask)] = table->table()[mask];
    }
    out["costs"] = std::move(costs);
  } else {
    Fail(ErrorKind::kConfiguration, "cost family \"" +
                                        std::string(oracle.family()) +
                                        "\" has no document form");
  }
  return out;
}

Json GainToJson(const GainVector& gain) {
  Json out = Json::array();
  for (const Scalar& entry : gain) out.push_back(ScalarToJson(entry));
  return out;
}

GainVector GainFromJson(const Json& value, const std::string& path) {
  GainVector out;
  const Json& array = Array(value, path);
  for (std::size_t k = 0; k < array.size(); ++k) {
    out.push_back(ScalarFromJson(array[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<std::string> StringList(const Json& value, const std::string& path) {
  std::vector<std::string> out;
  const Json& array = Array(value, path);
  for (std::size_t k = 0; k < array.size(); ++k) {
    out.push_back(String(array[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

// Bounded draw taken directly from the engine so that output does not depend
// on the standard library's distribution implementations.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

std::vector<PartitionCapCost::Category> RandomCategories(std::mt19937_64& rng,
                                                         std::size_t m) {
  const std::size_t t = 1 + Draw(rng, std::min<std::size_t>(3, std::max<std::size_t>(m, 1)));
  std::vector<PartitionCapCost::Category> categories(t);
  for (auto& category : categories) category.chores = ChoreSet(m);
  for (std::size_t o = 0; o < m; ++o) {
    const std::size_t j = Draw(rng, t + 1);
    if (j < t) categories[j].chores.set(o);
  }
  for (auto& category : categories) {
    category.cap = static_cast<std::int64_t>(Draw(rng, category.chores.count() + 1));
  }
  return categories;
}

}  // namespace

std::string SubsetKey(std::span<const std::string> labels, std::uint32_t mask) {
  std::vector<std::string> members;
  for (std::size_t o = 0; o < labels.size(); ++o) {
    if (mask >> o & 1u) members.push_back(labels[o]);
  }
  std::sort(members.begin(), members.end());
  std::string key;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) key += ",";
    key += members[k];
  }
  return key;
}

std::string SubsetKey(const Instance& instance, const ChoreSet& subset) {
  std::vector<std::string> members;
  for (std::size_t o : Members(subset)) members.push_back(instance.label(o));
  std::sort(members.begin(), members.end());
  std::string key;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) key += ",";
    key += members[k];
  }
  return key;
}

Instance ParseInstance(std::string_view text) {
  const Json root = ParseJson(text);
  CheckVersion(root);
  std::vector<std::string> labels =
      StringList(Field(root, "chores", "$"), "$.chores");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      InvalidField("$.chores", "duplicate chore label \"" + *dup + "\"");
    }
    for (const std::string& label : labels) {
      if (label.empty()) InvalidField("$.chores", "empty chore label");
      if (label.find(',') != std::string::npos) {
        InvalidField("$.chores", "chore label \"" + label + "\" contains a comma");
      }
    }
  }
  const LabelIndex index(labels);
  const Json& agents = Array(Field(root, "agents", "$"), "$.agents");
  if (agents.empty()) InvalidField("$.agents", "at least one agent is required");
  std::vector<Agent> parsed;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string path = "$.agents[" + std::to_string(i) + "]";
    Agent agent;
    agent.weight = RationalField(Field(agents[i], "weight", path), path + ".weight");
    if (agent.weight <= 0) InvalidField(path + ".weight", "weight must be positive");
    agent.cost = ParseCost(Field(agents[i], "cost", path), labels, index,
                           path + ".cost");
    parsed.push_back(std::move(agent));
  }
  return Instance(std::move(labels), std::move(parsed));
}

std::string SerializeInstance(const Instance& instance) {
  Json root;
  root["version"] = kDocumentVersion;
  root["chores"] = instance.labels();
  Json agents = Json::array();
  for (const Agent& agent : instance.agents()) {
    agents.push_back(Json{{"weight", FormatRational(agent.weight)},
                          {"cost", CostToJson(instance, *agent.cost)}});
  }
  root["agents"] = std::move(agents);
  return root.dump(2) + "\n";
}

ResultDocument MakeResultDocument(const Instance& instance,
                                  const YankeeSwapResult& result,
                                  const JusticeCriterion& criterion,
                                  std::optional<double> p, bool include_trace) {
  ResultDocument doc;
  doc.criterion = criterion.name();
  doc.p = p;
  const UtilityVector utilities = ComputeUtilities(instance, result.allocation);
  doc.value = criterion.Value(utilities, instance.weights());
  doc.clean_size = result.clean_size;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    ResultDocument::AgentEntry entry;
    entry.weight = instance.weight(i);
    for (std::size_t o : Members(result.decomposition.clean.bundle(i))) {
      entry.clean.push_back(instance.label(o));
    }
    for (std::size_t o : Members(result.decomposition.supplementary.bundle(i))) {
      entry.supplementary.push_back(instance.label(o));
    }
    entry.utility = utilities[i];
    entry.weighted_utility = Rational(utilities[i]) / instance.weight(i);
    doc.agents.push_back(std::move(entry));
  }
  if (include_trace) {
    doc.trace.emplace();
    for (const TraceStep& step : result.trace) {
      doc.trace->push_back({step.iteration, step.agent,
                            instance.label(step.chore), step.gain});
    }
  }
  return doc;
}

std::string SerializeResult(const ResultDocument& result) {
  Json root;
  root["version"] = kDocumentVersion;
  root["criterion"] = result.criterion;
  if (result.p) root["p"] = *result.p;
  root["value"] = GainToJson(result.value);
  root["clean_size"] = result.clean_size;
  Json agents = Json::array();
  Json utilities = Json::array();
  Json weighted = Json::array();
  for (const auto& agent : result.agents) {
    std::vector<std::string> chores = agent.clean;
    chores.insert(chores.end(), agent.supplementary.begin(),
                  agent.supplementary.end());
    agents.push_back(Json{{"weight", FormatRational(agent.weight)},
                          {"chores", chores},
                          {"clean", agent.clean},
                          {"supplementary", agent.supplementary},
                          {"utility", agent.utility},
                          {"weighted_utility",
                           FormatRational(agent.weighted_utility)}});
    utilities.push_back(agent.utility);
    weighted.push_back(FormatRational(agent.weighted_utility));
  }
  root["agents"] = std::move(agents);
  root["utilities"] = std::move(utilities);
  root["weighted_utilities"] = std::move(weighted);
  if (result.trace) {
    Json trace = Json::array();
    for (const auto& step : *result.trace) {
      trace.push_back(Json{{"iteration", step.iteration},
                           {"agent", step.agent},
                           {"chore", step.chore},
                           {"gain", GainToJson(step.gain)}});
    }
    root["trace"] = std::move(trace);
  }
  return root.dump(2) + "\n";
}

ResultDocument ParseResult(std::string_view text) {
  const Json root = ParseJson(text);
  CheckVersion(root);
  ResultDocument doc;
  doc.criterion = String(Field(root, "criterion", "$"), "$.criterion");
  if (auto it = root.find("p"); it != root.end()) {
    if (!it->is_number()) ParseFail("$.p", "expected a number");
    doc.p = it->get<double>();
  }
  doc.value = GainFromJson(Field(root, "value", "$"), "$.value");
  doc.clean_size = Count(Field(root, "clean_size", "$"), "$.clean_size");
  const Json& agents = Array(Field(root, "agents", "$"), "$.agents");
  const Json& utilities = Array(Field(root, "utilities", "$"), "$.utilities");
  const Json& weighted =
      Array(Field(root, "weighted_utilities", "$"), "$.weighted_utilities");
  if (utilities.size() != agents.size() || weighted.size() != agents.size()) {
    InvalidField("$.utilities", "length differs from the agent list");
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string path = "$.agents[" + std::to_string(i) + "]";
    ResultDocument::AgentEntry entry;
    entry.weight = RationalField(Field(agents[i], "weight", path), path + ".weight");
    entry.clean = StringList(Field(agents[i], "clean", path), path + ".clean");
    entry.supplementary = StringList(Field(agents[i], "supplementary", path),
                                     path + ".supplementary");
    entry.utility = Integer(Field(agents[i], "utility", path), path + ".utility");
    entry.weighted_utility = RationalField(
        Field(agents[i], "weighted_utility", path), path + ".weighted_utility");
    std::vector<std::string> chores =
        StringList(Field(agents[i], "chores", path), path + ".chores");
    std::vector<std::string> expected = entry.clean;
    expected.insert(expected.end(), entry.supplementary.begin(),
                    entry.supplementary.end());
    std::sort(chores.begin(), chores.end());
    std::sort(expected.begin(), expected.end());
    if (chores != expected) {
      InvalidField(path + ".chores", "differs from clean + supplementary");
    }
    const std::string index = "[" + std::to_string(i) + "]";
    if (Integer(utilities[i], "$.utilities" + index) != entry.utility ||
        RationalField(weighted[i], "$.weighted_utilities" + index) !=
            entry.weighted_utility) {
      InvalidField("$.utilities" + index, "disagrees with the agent entry");
    }
    doc.agents.push_back(std::move(entry));
  }
  if (auto it = root.find("trace"); it != root.end()) {
    doc.trace.emplace();
    const Json& trace = Array(*it, "$.trace");
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const std::string path = "$.trace[" + std::to_string(k) + "]";
      ResultDocument::TraceEntry step;
      step.iteration = Count(Field(trace[k], "iteration", path), path + ".iteration");
      step.agent = Count(Field(trace[k], "agent", path), path + ".agent");
      step.chore = String(Field(trace[k], "chore", path), path + ".chore");
      step.gain = GainFromJson(Field(trace[k], "gain", path), path + ".gain");
      doc.trace->push_back(std::move(step));
    }
  }
  return doc;
}

std::optional<std::string> CheckResultDocument(const Instance& instance,
                                               const ResultDocument& result) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_chores();
  if (result.agents.size() != n) return "agent count differs from the instance";
  std::vector<int> clean(m, kPool);
  std::vector<int> extra(m, kPool);
  std::vector<bool> seen(m, false);
  std::size_t clean_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& agent = result.agents[i];
    if (agent.weight != instance.weight(i)) {
      return "agent " + std::to_string(i) + "'s weight differs from the instance";
    }
    for (int part = 0; part < 2; ++part) {
      const auto& labels = part == 0 ? agent.clean : agent.supplementary;
      auto& owners = part == 0 ? clean : extra;
      for (const std::string& label : labels) {
        const std::optional<std::size_t> o = instance.FindChore(label);
        if (!o) return "unknown chore \"" + label + "\"";
        if (seen[*o]) return "chore \"" + label + "\" assigned twice";
        seen[*o] = true;
        owners[*o] = static_cast<int>(i);
        clean_count += part == 0;
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    return "allocation is not complete";
  }
  if (clean_count != result.clean_size) {
    return "clean_size differs from the clean bundles";
  }
  const Decomposition decomposition{Allocation::FromOwners(n, clean),
                                    Allocation::FromOwners(n, extra)};
  if (auto problem = FindDecompositionViolation(instance, decomposition)) {
    return problem;
  }
  const UtilityVector utilities =
      ComputeUtilities(instance, decomposition.Combined());
  for (std::size_t i = 0; i < n; ++i) {
    if (result.agents[i].utility != utilities[i]) {
      return "agent " + std::to_string(i) + "'s utility is misreported";
    }
    if (result.agents[i].weighted_utility !=
        Rational(utilities[i]) / instance.weight(i)) {
      return "agent " + std::to_string(i) + "'s weighted utility is misreported";
    }
  }
  const std::optional<CriterionKind> kind = ParseCriterionKind(result.criterion);
  if (!kind) return "unknown criterion \"" + result.criterion + "\"";
  const auto criterion = MakeCriterion(*kind, result.p);
  if (criterion->Value(utilities, instance.weights()) != result.value) {
    return "criterion value is misreported";
  }
  if (result.trace && result.trace->size() != m - result.clean_size) {
    return "trace length differs from the number of supplementary chores";
  }
  return std::nullopt;
}

std::string SerializeCounterexample(const Counterexample& counterexample) {
  Json out;
  out["condition"] = counterexample.condition;
  out["x"] = counterexample.x;
  out["y"] = counterexample.y;
  out["i"] = counterexample.i;
  out["j"] = counterexample.j;
  Json weights = Json::array();
  for (const Rational& w : counterexample.weights) {
    weights.push_back(FormatRational(w));
  }
  out["weights"] = std::move(weights);
  out["gain_i"] = GainToJson(counterexample.gain_i);
  out["gain_j"] = GainToJson(counterexample.gain_j);
  out["detail"] = counterexample.detail;
  return out.dump(2) + "\n";
}

Instance GenerateInstance(const GeneratorOptions& options) {
  if (options.num_agents == 0) {
    Fail(ErrorKind::kValidation, "--n must be at least 1");
  }
  if (options.families.empty()) {
    Fail(ErrorKind::kValidation, "at least one cost family is required");
  }
  for (const std::string& family : options.families) {
    if (family != "approval_cap" && family != "partition_cap" &&
        family != "explicit") {
      Fail(ErrorKind::kValidation, "unknown cost family \"" + family + "\"");
    }
    if (family == "explicit" && options.num_chores > kMaxGeneratedExplicitChores) {
      Fail(ErrorKind::kValidation,
           "the explicit family is generated only for m <= " +
               std::to_string(kMaxGeneratedExplicitChores));
    }
  }
  if (options.weight_values.empty() && options.weight_skew == 0) {
    Fail(ErrorKind::kValidation, "--weight-skew must be at least 1");
  }
  const std::size_t m = options.num_chores;
  std::mt19937_64 rng(options.seed);
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < options.num_agents; ++i) {
    Agent agent;
    if (!options.weight_values.empty()) {
      agent.weight = options.weight_values[Draw(rng, options.weight_values.size())];
    } else {
      const std::uint64_t num = 1 + Draw(rng, options.weight_skew);
      const std::uint64_t den = 1 + Draw(rng, options.weight_skew);
      agent.weight = Rational(BigInt(num), BigInt(den));
    }
    const std::string& family =
        options.families[Draw(rng, options.families.size())];
    if (family == "approval_cap") {
      ChoreSet approved(m);
      for (std::size_t o = 0; o < m; ++o) {
        if (Draw(rng, 2) == 1) approved.set(o);
      }
      const auto cap = static_cast<std::int64_t>(Draw(rng, approved.count() + 1));
      agent.cost = std::make_shared<ApprovalCapCost>(std::move(approved), cap);
    } else {
      PartitionCapCost partition(m, RandomCategories(rng, m));
      if (family == "partition_cap") {
        agent.cost = std::make_shared<PartitionCapCost>(std::move(partition));
      } else {
        agent.cost =
            std::make_shared<ExplicitCost>(ExplicitCost::Tabulate(partition));
      }
    }
    agents.push_back(std::move(agent));
  }
  return Instance(DefaultLabels(m), std::move(agents));
}

}  // namespace chorealloc
