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

// Surface English <-> SentenceModel for the supported simple-clause
// grammar:
//
//   NP be NP|Adj [circ]*            Zhang is a student.
//   NP V NP [circ]*                 I attend Beijing University.
//   NP V [PP|circ]*                 I study in Beijing University.
//   What be NP [been] [circ]*?      What was the pen's price two years ago?
//   How much be NP [been] [circ]*?  How much is the book?
//
// Noun phrases take an article or possessive determiner, genitive "'s",
// noun premodifiers, multi-word proper names and of/in/... postmodifiers
// (attached to the nearest noun phrase). Time adverbials are
// "<number> <unit> ago" and "since <year>". Anything else is rejected.

#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "gte/lexicon.hpp"
#include "gte/model.hpp"

namespace gte {

// Throws OutOfCoverage or UnknownWord. The result is an instance model in
// normal form (see normalize_instance).
SentenceModel parse_text(std::string_view text, const Lexicon& lexicon);

// Throws IncompleteModel for models with pseudo slots or missing parts,
// NotSupported for moods the realizer has no word order for.
std::string realize(const SentenceModel& model, const Lexicon& lexicon);
std::string realize_phrase(const NounPhrase& np);
std::string realize_circumstance(const Circumstance& c);

// Rewrites an instance model into the normal form parse_text produces:
// head features from the lexicon, verb features from the clause's
// agreement source, and the finite verb group rebuilt from its kernel
// lemma (modal groups are kept verbatim). Two models that realize to the
// same text are then equal_canonical.
void normalize_instance(SentenceModel& model, const Lexicon& lexicon);

// Person/number the finite verb agrees with. For "What be NP" questions
// this is the predicate, otherwise the subject.
std::pair<Person, Number> clause_agreement(const SentenceModel& model, const Lexicon& lexicon);

// Kernel verb lemma of a verb phrase ("be" for a copula with no words).
std::string kernel_lemma(const VerbPhrase& vp, const Lexicon& lexicon);

// Curly apostrophes become ASCII.
std::string normalize_apostrophes(std::string_view text);

}  // namespace gte
