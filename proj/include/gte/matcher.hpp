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

// Pattern matching of an instance sentence against a rule's left side.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gte/model.hpp"

namespace gte {

class Lexicon;
class Taxonomy;

// Value captured by one pseudo slot. `kind` says which member is used:
// NounPhrase -> phrase, Word -> word, Possessive -> possessive (either a
// pronoun in possessive.word or a genitive noun phrase in
// possessive.possessor).
struct Fragment {
  SlotKind kind = SlotKind::NounPhrase;
  NounPhrase phrase;
  std::string word;
  Premodifier possessive;

  bool operator==(const Fragment&) const = default;
};

using Binding = std::map<int, Fragment>;

struct MatchOutcome {
  Binding binding;
  Tense source_tense = Tense::Present;
  // Modal auxiliary of the source verb group, when source_tense is modal.
  std::optional<std::string> source_modal;
  std::pair<Person, Number> source_agreement{Person::Third, Number::Sing};
  std::vector<Circumstance> carried_circumstances;
};

enum class MatchStage { Mood, Subject, VerbPhrase, Circumstances };
std::string_view to_string(MatchStage stage);

// Which comparisons ran, in order, and where the match gave up.
struct MatchTrace {
  std::vector<MatchStage> compared;
  std::optional<MatchStage> failed_at;
};

// Pure. Returns nullopt when the sentence is not an instance of the
// pattern. Mood and complexity are compared first, then subject, verb
// phrase and circumstances; the first failing stage stops the comparison.
std::optional<MatchOutcome> match(const SentenceModel& pattern, const SentenceModel& sentence,
                                  const Taxonomy& taxonomy, const Lexicon& lexicon,
                                  MatchTrace* trace = nullptr);

// True if the head of `np` belongs to `category`: its lemma is a taxonomy
// descendant of the category, or one of its lexicon categories is.
bool in_category(const NounPhrase& np, std::string_view category, const Taxonomy& taxonomy,
                 const Lexicon& lexicon);

}  // namespace gte
