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

// Instantiation of a rule's right side from a match outcome.

#pragma once

#include <optional>

#include "gte/matcher.hpp"
#include "gte/model.hpp"
#include "gte/rules.hpp"

namespace gte {

class Lexicon;
class Taxonomy;

// Substitutes every pseudo slot of `templ` with its bound fragment,
// rebuilds the verb group from the source tense when the template asks
// for verb_change, appends the carried circumstances and returns the
// normalized instance model. Throws MissingBinding and
// CaseChangeOnNonPronoun.
SentenceModel instantiate(const SentenceModel& templ, const MatchOutcome& outcome,
                          const Lexicon& lexicon);

// match followed by instantiate; nullopt when the pattern does not match.
std::optional<SentenceModel> apply_rule(const Rule& rule, const SentenceModel& sentence,
                                        const Taxonomy& taxonomy, const Lexicon& lexicon);

}  // namespace gte
