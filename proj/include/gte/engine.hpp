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

// Entailment generation: one rule scan, hyponym entailment and the
// depth-bounded closure over both.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gte/lexicon.hpp"
#include "gte/model.hpp"
#include "gte/rules.hpp"
#include "gte/taxonomy.hpp"

namespace gte {

enum class LogicalMode { Always, Fallback, Off };
std::string_view to_string(LogicalMode mode);
std::optional<LogicalMode> parse_logical_mode(std::string_view s);

// One derivation step: a rule application or a hyponym substitution.
struct DerivationStep {
  std::optional<int> rule_id;
  std::string word;    // hyponym steps only
  std::string parent;  // hyponym steps only

  static DerivationStep rule(int id) { return {id, {}, {}}; }
  static DerivationStep hyponym(std::string word, std::string parent) {
    return {std::nullopt, std::move(word), std::move(parent)};
  }
  bool is_rule() const { return rule_id.has_value(); }
  // "3" or "hyponym:student→person".
  std::string to_string() const;

  bool operator==(const DerivationStep&) const = default;
};

struct EntailmentResult {
  std::string text;
  SentenceModel model;
  std::vector<DerivationStep> derivation;
  int depth = 1;
};

struct ClosureOptions {
  int max_depth = 3;
  LogicalMode mode = LogicalMode::Fallback;
};

struct RuleEntailment {
  int rule_id = 0;
  SentenceModel model;
};

struct HyponymEntailment {
  std::string word;
  std::string parent;
  SentenceModel model;
};

// Every rule in file order; results equal_canonical to an earlier one are
// dropped. Transformer errors are rethrown with the rule id prefixed.
std::vector<RuleEntailment> entail_once(const SentenceModel& sentence, const RuleSet& rules,
                                        const Taxonomy& taxonomy, const Lexicon& lexicon);

// One entailment per direct hypernym of the complement head, for copula
// statements with a noun-phrase predicate and transitive statements with a
// direct object. Only common nouns introduced by an article qualify.
std::vector<HyponymEntailment> logical_entail(const SentenceModel& sentence,
                                              const Taxonomy& taxonomy, const Lexicon& lexicon);

// Breadth-first closure, ordered by depth then discovery. The input and
// anything equal_canonical to an earlier result are excluded. Throws
// NotSupported for non-simple sentences and, for the text overload, any
// parse_text error.
std::vector<EntailmentResult> entail_closure(const SentenceModel& sentence, const RuleSet& rules,
                                             const Taxonomy& taxonomy, const Lexicon& lexicon,
                                             const ClosureOptions& options = {});
std::vector<EntailmentResult> entail_closure(std::string_view text, const RuleSet& rules,
                                             const Taxonomy& taxonomy, const Lexicon& lexicon,
                                             const ClosureOptions& options = {});

// The three knowledge sources the engine reads.
struct KnowledgeBase {
  Lexicon lexicon;
  Taxonomy taxonomy;
  RuleSet rules;

  struct Paths {
    std::filesystem::path rules;
    std::filesystem::path lexicon;
    std::filesystem::path taxonomy;
    // Defaults to verbs.tsv next to the lexicon, when that file exists.
    std::optional<std::filesystem::path> verbs;
  };
  static KnowledgeBase load(const Paths& paths);
};

}  // namespace gte
