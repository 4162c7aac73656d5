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

// Word knowledge: lexicon rows, verb paradigms, inflection and agreement.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gte/model.hpp"

namespace gte {

enum class Pos {
  Noun,
  Verb,
  Adjective,
  Adverb,
  Article,
  PossessivePronoun,
  PersonalPronoun,
  Preposition,
  Name,
  Relpron,
};

std::string_view to_string(Pos pos);
std::optional<Pos> parse_pos(std::string_view s);

struct LexiconEntry {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::Noun;
  std::optional<Person> person;
  std::optional<Number> number;
  std::set<std::string> categories;
};

struct VerbParadigm {
  std::string lemma;
  std::string third_sing_present;
  std::string past;
  std::string past_participle;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Lexicon TSV: surface, lemma, pos, person, number, categories (comma
  // separated). '-' marks an empty cell. Paradigm TSV: lemma,
  // third_sing_present, past, past_participle. '#' starts a comment line.
  static Lexicon load(const std::filesystem::path& lexicon_tsv,
                      const std::optional<std::filesystem::path>& paradigm_tsv = std::nullopt);
  static Lexicon from_text(std::string_view lexicon_tsv, std::string_view paradigm_tsv = {});

  // Duplicate (surface, pos) rows; the last row wins.
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Exact surface match first, then the lower-cased form.
  std::vector<const LexiconEntry*> lookup(std::string_view surface) const;
  const LexiconEntry* lookup(std::string_view surface, Pos pos) const;
  bool has(std::string_view surface, Pos pos) const { return lookup(surface, pos) != nullptr; }

  // Lower-cased lemma of a noun or name; the lower-cased word itself when
  // unknown.
  std::string noun_lemma(std::string_view word) const;
  // Plural surface form for a noun lemma (lexicon row when present, regular
  // rule otherwise).
  std::string plural_of(std::string_view lemma) const;

  bool is_verb(std::string_view lemma) const;
  // Lemma for any inflected verb form, including be and have.
  std::optional<std::string> verb_lemma(std::string_view form) const;
  // Paradigm row for irregular verbs, regular rules otherwise.
  VerbParadigm paradigm(std::string_view lemma) const;
  const std::vector<std::string>& verb_lemmas() const { return verb_lemmas_; }

  // Finite verb group. Present and past yield one word; present_perfect
  // yields {has|have, participle}. Modal yields the bare infinitive, the
  // modal auxiliary itself is carried by the sentence.
  std::vector<std::string> conjugate(std::string_view lemma, Tense tense, Person person,
                                     Number number) const;

  // Person and number of a noun phrase's head; (third, sing) when unknown.
  std::pair<Person, Number> agreement_of(const NounPhrase& np) const;

  const std::vector<LexiconEntry>& entries() const { return entries_; }

 private:
  void add_entry(LexiconEntry entry, int line);
  void add_paradigm(VerbParadigm p);
  void index_verbs();

  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, std::size_t> by_surface_;
  std::map<std::string, VerbParadigm> paradigms_;
  std::map<std::string, std::string> verb_forms_;  // any form -> lemma
  std::vector<std::string> verb_lemmas_;
  std::vector<std::string> warnings_;
};

// Regular inflection rules, exposed for tests and the realizer.
std::string regular_third_sing(std::string_view lemma);
std::string regular_past(std::string_view lemma);
std::string regular_plural(std::string_view lemma);

// my->I, your->you, his->he, her->she, its->it, our->we, their->they.
// Throws NotPossessive for any other word.
std::string possessive_to_nominative(std::string_view word);
bool is_possessive_pronoun(std::string_view word);
// can, could, will, would, may, might, must, should, shall.
bool is_modal(std::string_view word);
// "a" or "an" before `next_word`, by its initial sound.
std::string_view indefinite_article(std::string_view next_word);

std::string to_lower(std::string_view s);

}  // namespace gte
