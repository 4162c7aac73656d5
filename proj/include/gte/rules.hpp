// Copyright 2026 The GTE Authors. All Rights Reserved.
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

// Entailment rule database: XML load/save, structural validation and the
// example-based self test.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gte/model.hpp"

namespace gte {

class Lexicon;
class Taxonomy;

struct RuleExample {
  std::string source;
  std::string expect;

  bool operator==(const RuleExample&) const = default;
};

struct Rule {
  int id = 0;
  std::optional<int> reversed_id;
  std::string name;
  SentenceModel pattern;
  SentenceModel templ;  // the entailment side
  std::vector<RuleExample> examples;

  bool operator==(const Rule&) const = default;
};

// Ordered rules; file order is application order.
class RuleSet {
 public:
  RuleSet() = default;
  // Throws RuleParseError on duplicate ids, UnboundTemplateVariable and
  // BadReversedLink.
  explicit RuleSet(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const Rule* find(int id) const;

  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  bool operator==(const RuleSet& o) const { return rules_ == o.rules_; }

 private:
  std::vector<Rule> rules_;
  std::map<int, std::size_t> index_;
};

RuleSet load_rules(const std::filesystem::path& path);
RuleSet parse_rules(std::string_view xml);
// Same parsing without the RuleSet invariant checks, for validation tools.
std::vector<Rule> parse_rule_list(std::string_view xml);
std::vector<Rule> load_rule_list(const std::filesystem::path& path);
std::string serialize_rules(const RuleSet& rules);
// Writes to a sibling temporary file, then renames over `path`.
void save_rules(const RuleSet& rules, const std::filesystem::path& path);

// One <rule> element on its own, for the service's rule editing.
Rule parse_rule(std::string_view xml);
std::string serialize_rule(const Rule& rule, int indent = 0);

enum class FindingKind {
  UnboundTemplateVariable,
  UnknownCategory,
  VerbChangeInPattern,
  CategoryInTemplate,
  UnsupportedComplexity,
  DuplicateId,
  BadReversedLink,
  InvalidId,
};

std::string_view to_string(FindingKind kind);

struct Finding {
  FindingKind kind;
  int rule_id = 0;
  std::string message;
};

// Empty iff the rule satisfies every rule invariant and, when a taxonomy is
// given, every category it names is a taxonomy node.
std::vector<Finding> validate(const Rule& rule, const Taxonomy* taxonomy = nullptr);
// Per-rule findings plus id uniqueness and reversed-link symmetry.
std::vector<Finding> validate(const std::vector<Rule>& rules, const Taxonomy* taxonomy = nullptr);

struct ExampleOutcome {
  RuleExample example;
  bool passed = false;
  std::vector<std::string> produced;  // realized output of the rule, if any
  std::string error;
};

struct RuleTestReport {
  int rule_id = 0;
  std::string name;
  std::vector<ExampleOutcome> examples;
  bool passed() const;
};

struct SelfTestReport {
  std::vector<RuleTestReport> rules;
  std::size_t example_count() const;
  std::size_t passed_count() const;
  bool all_passed() const { return passed_count() == example_count(); }
};

// For every embedded (T, H) pair: H must be what this rule alone derives
// from parse_text(T). Failures are recorded, never thrown.
RuleTestReport self_test(const Rule& rule, const Taxonomy& taxonomy, const Lexicon& lexicon);
SelfTestReport self_test(const RuleSet& rules, const Taxonomy& taxonomy, const Lexicon& lexicon);

}  // namespace gte
