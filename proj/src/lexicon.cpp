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

#include "gte/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gte/errors.hpp"

namespace gte {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 10> kPos{{
    {Pos::Noun, "noun"},
    {Pos::Verb, "verb"},
    {Pos::Adjective, "adjective"},
    {Pos::Adverb, "adverb"},
    {Pos::Article, "article"},
    {Pos::PossessivePronoun, "possessive_pronoun"},
    {Pos::PersonalPronoun, "personal_pronoun"},
    {Pos::Preposition, "preposition"},
    {Pos::Name, "name"},
    {Pos::Relpron, "relpron"},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kPossessives{{
    {"my", "I"},
    {"your", "you"},
    {"his", "he"},
    {"her", "she"},
    {"its", "it"},
    {"our", "we"},
    {"their", "they"},
}};

bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool consonant_y(std::string_view s) {
  return s.size() >= 2 && s.back() == 'y' && !is_vowel(s[s.size() - 2]);
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool skip_line(std::string_view line) {
  std::string s = strip(line);
  return s.empty() || s[0] == '#';
}

[[noreturn]] void bad_row(int line, const std::string& why) {
  throw Error(ErrorCode::BadRow, "line " + std::to_string(line) + ": " + why);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view to_string(Pos pos) {
  for (const auto& [p, s] : kPos) {
    if (p == pos) return s;
  }
  return "?";
}

std::optional<Pos> parse_pos(std::string_view s) {
  for (const auto& [p, n] : kPos) {
    if (n == s) return p;
  }
  return std::nullopt;
}

std::string regular_third_sing(std::string_view lemma) {
  std::string s(lemma);
  if (consonant_y(s)) return s.substr(0, s.size() - 1) + "ies";
  if (ends_with(s, "s") || ends_with(s, "x") || ends_with(s, "z") || ends_with(s, "ch") ||
      ends_with(s, "sh") || ends_with(s, "o")) {
    return s + "es";
  }
  return s + "s";
}

std::string regular_past(std::string_view lemma) {
  std::string s(lemma);
  if (ends_with(s, "e")) return s + "d";
  if (consonant_y(s)) return s.substr(0, s.size() - 1) + "ied";
  return s + "ed";
}

std::string regular_plural(std::string_view lemma) { return regular_third_sing(lemma); }

bool is_modal(std::string_view word) {
  static const std::set<std::string, std::less<>> kModals{
      "can", "could", "will", "would", "may", "might", "must", "should", "shall"};
  return kModals.count(to_lower(word)) > 0;
}

std::string_view indefinite_article(std::string_view next_word) {
  std::string w = to_lower(next_word);
  if (w.empty()) return "a";
  // Spelling exceptions: a vowel letter read as a consonant, or a silent h.
  for (const char* p : {"uni", "use", "usu", "eu", "one", "once"}) {
    if (w.rfind(p, 0) == 0) return "a";
  }
  for (const char* p : {"hour", "honest", "honor", "honour", "heir"}) {
    if (w.rfind(p, 0) == 0) return "an";
  }
  return std::string_view("aeiou").find(w[0]) != std::string_view::npos ? "an" : "a";
}

bool is_possessive_pronoun(std::string_view word) {
  std::string w = to_lower(word);
  return std::any_of(kPossessives.begin(), kPossessives.end(),
                     [&](const auto& p) { return p.first == w; });
}

std::string possessive_to_nominative(std::string_view word) {
  std::string w = to_lower(word);
  for (const auto& [poss, nom] : kPossessives) {
    if (poss == w) return std::string(nom);
  }
  throw Error(ErrorCode::NotPossessive, "'" + std::string(word) + "' is not a possessive pronoun");
}

Lexicon Lexicon::from_text(std::string_view lexicon_tsv, std::string_view paradigm_tsv) {
  Lexicon lex;
  int line_no = 0;
  std::istringstream in{std::string(lexicon_tsv)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 6) {
      bad_row(line_no, "expected 6 tab-separated columns, found " + std::to_string(cols.size()));
    }
    for (auto& c : cols) c = strip(c);
    LexiconEntry e;
    e.surface = cols[0];
    e.lemma = cols[1] == "-" || cols[1].empty() ? cols[0] : cols[1];
    if (e.surface.empty()) bad_row(line_no, "empty surface");
    auto pos = parse_pos(cols[2]);
    if (!pos) bad_row(line_no, "unknown part of speech '" + cols[2] + "'");
    e.pos = *pos;
    if (cols[3] != "-" && !cols[3].empty()) {
      e.person = parse_person(cols[3]);
      if (!e.person) bad_row(line_no, "bad person '" + cols[3] + "'");
    }
    if (cols[4] != "-" && !cols[4].empty()) {
      e.number = parse_number(cols[4]);
      if (!e.number) bad_row(line_no, "bad number '" + cols[4] + "'");
    }
    if (cols[5] != "-" && !cols[5].empty()) {
      for (auto& c : split(cols[5], ',')) {
        c = strip(c);
        if (!c.empty()) e.categories.insert(c);
      }
    }
    lex.add_entry(std::move(e), line_no);
  }

  line_no = 0;
  std::istringstream pin{std::string(paradigm_tsv)};
  for (std::string line; std::getline(pin, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 4) {
      bad_row(line_no, "verb paradigm rows need 4 columns, found " + std::to_string(cols.size()));
    }
    for (auto& c : cols) {
      c = strip(c);
      if (c.empty()) bad_row(line_no, "empty paradigm form");
    }
    lex.add_paradigm(VerbParadigm{cols[0], cols[1], cols[2], cols[3]});
  }
  lex.index_verbs();
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& lexicon_tsv,
                      const std::optional<std::filesystem::path>& paradigm_tsv) {
  std::string lex = read_file(lexicon_tsv);
  std::string par = paradigm_tsv ? read_file(*paradigm_tsv) : std::string();
  return from_text(lex, par);
}

void Lexicon::add_entry(LexiconEntry entry, int line) {
  auto range = by_surface_.equal_range(entry.surface);
  for (auto it = range.first; it != range.second; ++it) {
    if (entries_[it->second].pos == entry.pos) {
      warnings_.push_back("line " + std::to_string(line) + ": duplicate entry '" +
                          entry.surface + "' (" + std::string(to_string(entry.pos)) +
                          "), last row wins");
      entries_[it->second] = std::move(entry);
      return;
    }
  }
  by_surface_.emplace(entry.surface, entries_.size());
  entries_.push_back(std::move(entry));
}

void Lexicon::add_paradigm(VerbParadigm p) {
  std::string lemma = p.lemma;
  paradigms_[lemma] = std::move(p);
}

void Lexicon::index_verbs() {
  std::set<std::string> lemmas;
  for (const auto& e : entries_) {
    if (e.pos == Pos::Verb) lemmas.insert(e.lemma);
  }
  for (const auto& [lemma, p] : paradigms_) lemmas.insert(lemma);
  lemmas.insert("be");
  lemmas.insert("have");
  verb_lemmas_.assign(lemmas.begin(), lemmas.end());
  for (const auto& lemma : verb_lemmas_) {
    VerbParadigm p = paradigm(lemma);
    for (const auto& form : {p.lemma, p.third_sing_present, p.past, p.past_participle}) {
      verb_forms_.emplace(form, lemma);
    }
  }
  for (const char* be : {"am", "is", "are", "was", "were", "been", "be"}) {
    verb_forms_[be] = "be";
  }
  // Surface rows for inflected verbs point at their lemma too.
  for (const auto& e : entries_) {
    if (e.pos == Pos::Verb) verb_forms_.emplace(e.surface, e.lemma);
  }
}

std::vector<const LexiconEntry*> Lexicon::lookup(std::string_view surface) const {
  std::vector<const LexiconEntry*> out;
  auto range = by_surface_.equal_range(std::string(surface));
  for (auto it = range.first; it != range.second; ++it) out.push_back(&entries_[it->second]);
  if (out.empty()) {
    std::string lower = to_lower(surface);
    if (lower != surface) {
      range = by_surface_.equal_range(lower);
      for (auto it = range.first; it != range.second; ++it) out.push_back(&entries_[it->second]);
    }
  }
  return out;
}

const LexiconEntry* Lexicon::lookup(std::string_view surface, Pos pos) const {
  for (const auto* e : lookup(surface)) {
    if (e->pos == pos) return e;
  }
  return nullptr;
}

std::string Lexicon::noun_lemma(std::string_view word) const {
  if (const auto* e = lookup(word, Pos::Noun)) return to_lower(e->lemma);
  if (const auto* e = lookup(word, Pos::Name)) return to_lower(e->lemma);
  return to_lower(word);
}

std::string Lexicon::plural_of(std::string_view lemma) const {
  for (const auto& e : entries_) {
    if (e.pos == Pos::Noun && e.number == Number::Plur && to_lower(e.lemma) == to_lower(lemma)) {
      return e.surface;
    }
  }
  return regular_plural(lemma);
}

bool Lexicon::is_verb(std::string_view lemma) const {
  return std::binary_search(verb_lemmas_.begin(), verb_lemmas_.end(), std::string(lemma));
}

std::optional<std::string> Lexicon::verb_lemma(std::string_view form) const {
  auto it = verb_forms_.find(std::string(form));
  if (it == verb_forms_.end()) it = verb_forms_.find(to_lower(form));
  if (it == verb_forms_.end()) return std::nullopt;
  return it->second;
}

VerbParadigm Lexicon::paradigm(std::string_view lemma) const {
  std::string l(lemma);
  if (l == "be") return {"be", "is", "was", "been"};
  if (auto it = paradigms_.find(l); it != paradigms_.end()) return it->second;
  if (l == "have") return {"have", "has", "had", "had"};
  std::string past = regular_past(l);
  return {l, regular_third_sing(l), past, past};
}

std::vector<std::string> Lexicon::conjugate(std::string_view lemma, Tense tense, Person person,
                                            Number number) const {
  std::string l(lemma);
  if (!is_verb(l)) throw Error(ErrorCode::UnknownVerb, "unknown verb '" + l + "'");
  const bool third_sing = person == Person::Third && number == Number::Sing;
  const bool singular_i = number == Number::Sing && person != Person::Second;

  if (tense == Tense::Modal) return {l};
  if (tense == Tense::PresentPerfect) {
    return {third_sing ? "has" : "have", paradigm(l).past_participle};
  }
  if (l == "be") {
    if (tense == Tense::Past) return {singular_i ? "was" : "were"};
    if (person == Person::First && number == Number::Sing) return {"am"};
    return {third_sing ? "is" : "are"};
  }
  VerbParadigm p = paradigm(l);
  if (tense == Tense::Past) return {p.past};
  return {third_sing ? p.third_sing_present : p.lemma};
}

std::pair<Person, Number> Lexicon::agreement_of(const NounPhrase& np) const {
  std::pair<Person, Number> fallback{Person::Third, Number::Sing};
  if (!np.head) return fallback;
  const std::string& w = np.head->word;
  if (const auto* e = lookup(w, Pos::PersonalPronoun)) {
    return {e->person.value_or(Person::Third), e->number.value_or(Number::Sing)};
  }
  if (np.head->type == HeadType::Name || np.head->type == HeadType::Relpron) return fallback;
  if (const auto* e = lookup(w, Pos::Noun)) {
    return {e->person.value_or(Person::Third), e->number.value_or(Number::Sing)};
  }
  return fallback;
}

}  // namespace gte
