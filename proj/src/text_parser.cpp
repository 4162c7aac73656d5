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

#include "gte/text_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "gte/errors.hpp"

namespace gte {

namespace {

constexpr std::array<std::string_view, 16> kNumberWords{
    "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "twenty", "thirty", "fifty", "hundred"};
constexpr std::array<std::string_view, 14> kTimeUnits{
    "second", "seconds", "minute", "minutes", "hour", "hours", "day",
    "days",   "week",    "weeks",   "month",  "months", "year", "years"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, std::string_view w) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_capitalized(std::string_view w) {
  return !w.empty() && std::isupper(static_cast<unsigned char>(w[0]));
}

bool all_digits(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_be_form(std::string_view w) {
  return w == "am" || w == "is" || w == "are" || w == "was" || w == "were";
}

bool is_have_form(std::string_view w) { return w == "has" || w == "have" || w == "had"; }

[[noreturn]] void out_of_coverage(const std::string& why) {
  throw Error(ErrorCode::OutOfCoverage, why);
}

[[noreturn]] void unknown_word(std::string_view w) {
  throw Error(ErrorCode::UnknownWord, "unknown word '" + std::string(w) + "'");
}

struct Token {
  std::string text;
  std::string lower;
};

std::vector<Token> tokenize(std::string_view body) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i >= body.size()) break;
    std::size_t start = i;
    while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    std::string word(body.substr(start, i - start));
    for (char c : word) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '-' ||
            static_cast<unsigned char>(c) >= 0x80)) {
        out_of_coverage("unsupported punctuation '" + std::string(1, c) + "' in '" + word + "'");
      }
    }
    std::string genitive;
    if (word.size() > 2 && word.compare(word.size() - 2, 2, "'s") == 0) {
      word.resize(word.size() - 2);
      genitive = "'s";
    }
    if (word.find('\'') != std::string::npos) {
      out_of_coverage("unsupported apostrophe use in '" + word + "'; only 's possessives");
    }
    out.push_back({word, to_lower(word)});
    if (!genitive.empty()) out.push_back({genitive, genitive});
  }
  return out;
}

class TextParser {
 public:
  TextParser(const Lexicon& lex, std::vector<Token> tokens) : lex_(lex), toks_(std::move(tokens)) {
    if (!toks_.empty()) normalize_initial();
  }

  SentenceModel statement() {
    SentenceModel m;
    m.mood = Mood::Statement;
    if (!starts_np(pos_)) not_a_phrase(pos_, "a subject");
    m.subject = noun_phrase();
    verb_group(m.verb_phrase);
    complement(m.verb_phrase);
    circumstances(m);
    return m;
  }

  SentenceModel question() {
    SentenceModel m;
    m.mood = Mood::Question;
    VerbPhrase& vp = m.verb_phrase;
    vp.verb_type = VerbType::Be;
    bool perfect = false;
    if (lower(0) == "what") {
      pos_ = 1;
      m.subject.head = Head{"what", HeadType::Relpron, std::nullopt, std::nullopt};
      perfect = finite_copula(vp);
      if (!starts_np(pos_)) not_a_phrase(pos_, "a noun phrase after the verb");
      Predicate pred;
      pred.type = PredicateType::Np;
      pred.noun_phrase = noun_phrase();
      vp.predicate = std::move(pred);
    } else if (lower(0) == "how" && lower(1) == "much") {
      pos_ = 2;
      perfect = finite_copula(vp);
      if (!starts_np(pos_)) not_a_phrase(pos_, "a noun phrase after the verb");
      m.subject = noun_phrase();
      Predicate pred;
      pred.type = PredicateType::QueryAdj;
      pred.adjective = QueryAdjective{"extent", "how", "much", Grad::Abso};
      vp.predicate = std::move(pred);
    } else {
      out_of_coverage("only 'What be ...?' and 'How much be ...?' questions are supported");
    }
    if (perfect) {
      if (lower(pos_) != "been") out_of_coverage("expected 'been' to complete the perfect tense");
      vp.verb_words.push_back("been");
      ++pos_;
    }
    circumstances(m);
    return m;
  }

 private:
  bool at_end(std::size_t i) const { return i >= toks_.size(); }
  const std::string& text(std::size_t i) const {
    static const std::string empty;
    return at_end(i) ? empty : toks_[i].text;
  }
  const std::string& lower(std::size_t i) const {
    static const std::string empty;
    return at_end(i) ? empty : toks_[i].lower;
  }

  // Sentence-initial capitals are dropped unless the word is known in its
  // capitalized form (I, English) or unknown altogether (proper names).
  void normalize_initial() {
    Token& t = toks_[0];
    if (!lex_.lookup(t.text).empty() && lex_.lookup(t.text).front()->surface == t.text) return;
    if (!lex_.lookup(t.lower).empty() || lex_.verb_lemma(t.lower) || t.lower == "what" ||
        t.lower == "how") {
      t.text = t.lower;
    }
  }

  bool is(std::size_t i, Pos pos) const { return !at_end(i) && lex_.has(text(i), pos); }

  bool known(std::size_t i) const {
    return !lex_.lookup(text(i)).empty() || lex_.verb_lemma(text(i)).has_value() ||
           is_modal(lower(i));
  }

  bool is_name_like(std::size_t i) const {
    if (at_end(i)) return false;
    if (is(i, Pos::Name)) return true;
    return is_capitalized(text(i)) && !known(i);
  }

  bool is_nominal(std::size_t i) const {
    if (at_end(i) || text(i) == "'s") return false;
    if (is_name_like(i)) return true;
    return is(i, Pos::Noun);
  }

  bool starts_np(std::size_t i) const {
    if (at_end(i)) return false;
    return is(i, Pos::Article) || is(i, Pos::PossessivePronoun) || is(i, Pos::PersonalPronoun) ||
           is_nominal(i);
  }

  [[noreturn]] void not_a_phrase(std::size_t i, const std::string& expected) const {
    if (at_end(i)) out_of_coverage("sentence ends where " + expected + " was expected");
    if (!known(i) && !is_capitalized(text(i))) unknown_word(text(i));
    out_of_coverage("expected " + expected + " at '" + text(i) + "'");
  }

  std::size_t adverbial_length(std::size_t i) const {
    if (at_end(i)) return 0;
    if ((in(kNumberWords, lower(i)) || all_digits(lower(i))) && in(kTimeUnits, lower(i + 1)) &&
        lower(i + 2) == "ago") {
      return 3;
    }
    if (lower(i) == "since" && all_digits(lower(i + 1)) && lower(i + 1).size() == 4) return 2;
    return 0;
  }

  void build_nominal(NounPhrase& np, std::size_t from, std::size_t to) {
    const std::size_t last = to - 1;
    const bool head_is_name = is_name_like(last);
    bool all_names = head_is_name;
    for (std::size_t i = from; i < last; ++i) all_names = all_names && is_name_like(i);
    if (all_names) {
      std::string joined;
      for (std::size_t i = from; i < to; ++i) {
        if (!joined.empty()) joined += ' ';
        joined += text(i);
      }
      np.head = Head{joined, HeadType::Name, std::nullopt, std::nullopt};
      return;
    }
    for (std::size_t i = from; i < last; ++i) {
      Premodifier p;
      p.kind = is_capitalized(text(i)) ? PremodKind::Address : PremodKind::Noun;
      p.word = text(i);
      np.premods.push_back(std::move(p));
    }
    np.head = Head{text(last), head_is_name ? HeadType::Name : HeadType::Noun, std::nullopt,
                   std::nullopt};
  }

  NounPhrase noun_phrase() {
    NounPhrase np;
    if (is(pos_, Pos::PersonalPronoun)) {
      np.head = Head{text(pos_), HeadType::Noun, std::nullopt, std::nullopt};
      ++pos_;
      return np;
    }
    if (is(pos_, Pos::Article)) {
      np.premods.push_back(Premodifier{PremodKind::Article, lower(pos_), {}, std::nullopt});
      ++pos_;
    } else if (is(pos_, Pos::PossessivePronoun)) {
      np.premods.push_back(Premodifier{PremodKind::Possessive, lower(pos_), {}, std::nullopt});
      ++pos_;
    }
    for (;;) {
      std::size_t start = pos_;
      while (is_nominal(pos_)) ++pos_;
      if (start == pos_) not_a_phrase(pos_, "a noun");
      build_nominal(np, start, pos_);
      if (text(pos_) != "'s") break;
      ++pos_;
      Premodifier genitive;
      genitive.kind = PremodKind::Possessive;
      genitive.possessor = std::move(np);
      np = NounPhrase{};
      np.premods.push_back(std::move(genitive));
    }
    while (is(pos_, Pos::Preposition) && adverbial_length(pos_) == 0 && starts_np(pos_ + 1)) {
      PrepPhrase pp;
      pp.preposition = lower(pos_);
      ++pos_;
      pp.object = noun_phrase();
      np.postmods.push_back(std::move(pp));
    }
    return np;
  }

  // Returns true when the finite verb is a have-form awaiting "been".
  bool finite_copula(VerbPhrase& vp) {
    const std::string& w = lower(pos_);
    if (is_be_form(w)) {
      vp.verb_words.push_back(w);
      vp.tense = (w == "was" || w == "were") ? Tense::Past : Tense::Present;
      ++pos_;
      return false;
    }
    if (w == "has" || w == "have") {
      vp.verb_words.push_back(w);
      vp.tense = Tense::PresentPerfect;
      ++pos_;
      return true;
    }
    if (at_end(pos_)) out_of_coverage("question without a verb");
    out_of_coverage("questions need a form of 'be' after the wh-word, found '" + text(pos_) + "'");
  }

  void verb_group(VerbPhrase& vp) {
    if (at_end(pos_)) out_of_coverage("sentence has no verb");
    const std::string& w = lower(pos_);
    if (is_be_form(w)) {
      vp.verb_type = VerbType::Be;
      vp.verb_words = {w};
      vp.tense = (w == "was" || w == "were") ? Tense::Past : Tense::Present;
      ++pos_;
      return;
    }
    if (is_have_form(w)) {
      const std::string& next = lower(pos_ + 1);
      if (next == "been") {
        if (w == "had") out_of_coverage("past perfect is not supported");
        vp.verb_type = VerbType::Be;
        vp.verb_words = {w, "been"};
        vp.tense = Tense::PresentPerfect;
        pos_ += 2;
        return;
      }
      auto lemma = lex_.verb_lemma(next);
      if (lemma && *lemma != "have" && lex_.paradigm(*lemma).past_participle == next) {
        if (w == "had") out_of_coverage("past perfect is not supported");
        vp.verb_type = VerbType::Verb;
        vp.verb_words = {w, next};
        vp.tense = Tense::PresentPerfect;
        pos_ += 2;
        return;
      }
      vp.verb_type = VerbType::Verb;
      vp.verb_words = {w};
      vp.tense = w == "had" ? Tense::Past : Tense::Present;
      ++pos_;
      return;
    }
    if (is_modal(w)) {
      const std::string& next = lower(pos_ + 1);
      auto lemma = lex_.verb_lemma(next);
      if (!lemma || *lemma != next) {
        if (!at_end(pos_ + 1) && !known(pos_ + 1)) unknown_word(text(pos_ + 1));
        out_of_coverage("a modal must be followed by a bare verb");
      }
      vp.verb_type = next == "be" ? VerbType::Be : VerbType::Verb;
      vp.verb_words = {w, next};
      vp.tense = Tense::Modal;
      vp.kernel_infinitive = true;
      pos_ += 2;
      return;
    }
    auto lemma = lex_.verb_lemma(w);
    if (!lemma) {
      if (!known(pos_)) unknown_word(text(pos_));
      out_of_coverage("expected a verb at '" + text(pos_) + "'");
    }
    VerbParadigm p = lex_.paradigm(*lemma);
    vp.verb_type = VerbType::Verb;
    vp.verb_words = {w};
    if (w == p.lemma || w == p.third_sing_present) {
      vp.tense = Tense::Present;
    } else if (w == p.past) {
      vp.tense = Tense::Past;
    } else {
      out_of_coverage("'" + w + "' is not a finite verb form");
    }
    ++pos_;
  }

  void complement(VerbPhrase& vp) {
    if (vp.verb_type == VerbType::Be) {
      Predicate pred;
      if (starts_np(pos_)) {
        pred.type = PredicateType::Np;
        pred.noun_phrase = noun_phrase();
      } else if (is(pos_, Pos::Adjective)) {
        pred.type = PredicateType::Adj;
        pred.adjective = QueryAdjective{"", "", lower(pos_), Grad::Abso};
        ++pos_;
      } else {
        not_a_phrase(pos_, "a noun phrase or adjective after 'be'");
      }
      vp.predicate = std::move(pred);
      return;
    }
    if (starts_np(pos_) && adverbial_length(pos_) == 0) {
      vp.verb_type = VerbType::VerbObject;
      vp.direct_object = noun_phrase();
    }
  }

  void circumstances(SentenceModel& m) {
    while (!at_end(pos_)) {
      if (std::size_t n = adverbial_length(pos_)) {
        Circumstance c;
        c.kind = CircumKind::Adverbial;
        for (std::size_t i = 0; i < n; ++i) c.tokens.push_back(lower(pos_ + i));
        m.circumstances.push_back(std::move(c));
        pos_ += n;
        continue;
      }
      if (is(pos_, Pos::Preposition) && starts_np(pos_ + 1)) {
        Circumstance c;
        c.kind = CircumKind::PrepPhrase;
        c.prep_phrase.preposition = lower(pos_);
        ++pos_;
        c.prep_phrase.object = noun_phrase();
        m.circumstances.push_back(std::move(c));
        continue;
      }
      if (!known(pos_) && !is_capitalized(text(pos_))) unknown_word(text(pos_));
      out_of_coverage("unexpected '" + text(pos_) + "'");
    }
  }

  const Lexicon& lex_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// realization

void require_complete(const NounPhrase& np) {
  if (np.pseudo) {
    throw Error(ErrorCode::IncompleteModel,
                "pseudo variable " + std::to_string(np.pseudo->index) + " is unbound");
  }
  if (!np.head) throw Error(ErrorCode::IncompleteModel, "noun phrase without a head");
}

void phrase_words(const NounPhrase& np, std::vector<std::string>& out) {
  require_complete(np);
  std::size_t article_at = std::string::npos;
  for (const auto& p : np.premods) {
    if (p.pseudo) {
      throw Error(ErrorCode::IncompleteModel,
                  "pseudo variable " + std::to_string(p.pseudo->index) + " is unbound");
    }
    if (p.kind == PremodKind::Possessive && p.possessor) {
      phrase_words(*p.possessor, out);
      out.back() += "'s";
    } else {
      if (p.kind == PremodKind::Article && (p.word == "a" || p.word == "an")) {
        article_at = out.size();
      }
      out.push_back(p.word);
    }
  }
  out.push_back(np.head->word);
  if (article_at != std::string::npos) {
    out[article_at] = std::string(indefinite_article(out[article_at + 1]));
  }
  for (const auto& pp : np.postmods) {
    out.push_back(pp.preposition);
    phrase_words(pp.object, out);
  }
}

std::vector<std::string> verb_group(const SentenceModel& m, const Lexicon& lex) {
  const VerbPhrase& vp = m.verb_phrase;
  if (vp.tense == Tense::Modal) {
    if (vp.verb_words.empty()) throw Error(ErrorCode::IncompleteModel, "modal group without words");
    return vp.verb_words;
  }
  std::string lemma = kernel_lemma(vp, lex);
  Tense tense = vp.tense.value_or(Tense::Present);
  auto [person, number] = clause_agreement(m, lex);
  return lex.conjugate(lemma, tense, person, number);
}

void circumstance_words(const Circumstance& c, std::vector<std::string>& out) {
  if (c.kind == CircumKind::Adverbial) {
    out.insert(out.end(), c.tokens.begin(), c.tokens.end());
  } else {
    out.push_back(c.prep_phrase.preposition);
    phrase_words(c.prep_phrase.object, out);
  }
}

void predicate_words(const Predicate& pred, std::vector<std::string>& out) {
  if (pred.type == PredicateType::Np) {
    phrase_words(pred.noun_phrase, out);
    return;
  }
  if (!pred.adjective.adverb.empty()) out.push_back(pred.adjective.adverb);
  out.push_back(pred.adjective.adjective);
}

void normalize_phrase(NounPhrase& np, const Lexicon& lex) {
  for (auto& p : np.premods) {
    if (p.possessor) normalize_phrase(*p.possessor, lex);
  }
  if (np.head) {
    if (np.head->type == HeadType::Relpron) {
      np.head->person = Person::Third;
      np.head->number = Number::Sing;
    } else {
      auto [person, number] = lex.agreement_of(np);
      np.head->person = person;
      np.head->number = number;
    }
  }
  np.category.reset();
  np.type_constraint.reset();
  for (auto& pp : np.postmods) normalize_phrase(pp.object, lex);
}

}  // namespace

std::string normalize_apostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2018 / U+2019 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(text[i + 2]) == 0x98 ||
         static_cast<unsigned char>(text[i + 2]) == 0x99)) {
      out.push_back('\'');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

SentenceModel parse_text(std::string_view input, const Lexicon& lexicon) {
  std::string text = normalize_apostrophes(input);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  text.erase(0, lead);
  if (text.empty()) out_of_coverage("empty text");

  Mood mood = Mood::Statement;
  switch (text.back()) {
    case '?':
      mood = Mood::Question;
      text.pop_back();
      break;
    case '.':
      text.pop_back();
      break;
    case '!':
      out_of_coverage("exclamations are not supported");
    default:
      break;
  }
  auto tokens = tokenize(text);
  if (tokens.empty()) out_of_coverage("empty text");

  TextParser parser(lexicon, std::move(tokens));
  SentenceModel model = mood == Mood::Question ? parser.question() : parser.statement();
  normalize_instance(model, lexicon);
  return model;
}

std::string kernel_lemma(const VerbPhrase& vp, const Lexicon& lex) {
  if (vp.verb_words.empty()) {
    if (vp.verb_type == VerbType::Be) return "be";
    throw Error(ErrorCode::IncompleteModel, "verb phrase without verb words");
  }
  const std::string& last = vp.verb_words.back();
  if (auto lemma = lex.verb_lemma(last)) return *lemma;
  throw Error(ErrorCode::UnknownVerb, "unknown verb '" + last + "'");
}

std::pair<Person, Number> clause_agreement(const SentenceModel& m, const Lexicon& lex) {
  const VerbPhrase& vp = m.verb_phrase;
  if (m.subject.head && m.subject.head->type == HeadType::Relpron && vp.predicate &&
      vp.predicate->type == PredicateType::Np && vp.predicate->noun_phrase.head) {
    return lex.agreement_of(vp.predicate->noun_phrase);
  }
  return lex.agreement_of(m.subject);
}

void normalize_instance(SentenceModel& m, const Lexicon& lex) {
  m.flavor = Flavor::Instance;
  normalize_phrase(m.subject, lex);
  VerbPhrase& vp = m.verb_phrase;
  vp.verb_change = false;
  if (vp.predicate && vp.predicate->type == PredicateType::Np) {
    normalize_phrase(vp.predicate->noun_phrase, lex);
  }
  if (vp.direct_object) normalize_phrase(*vp.direct_object, lex);
  for (auto& c : m.circumstances) {
    if (c.kind == CircumKind::PrepPhrase) normalize_phrase(c.prep_phrase.object, lex);
  }

  auto [person, number] = clause_agreement(m, lex);
  vp.person = person;
  vp.number = number;
  if (!vp.tense) {
    const auto& w = vp.verb_words;
    if (w.size() >= 2 && is_modal(to_lower(w.front()))) {
      vp.tense = Tense::Modal;
    } else if (w.size() == 2 && (w.front() == "has" || w.front() == "have")) {
      vp.tense = Tense::PresentPerfect;
    } else if (w.size() == 1) {
      std::string lemma = kernel_lemma(vp, lex);
      VerbParadigm p = lex.paradigm(lemma);
      bool past = lemma == "be" ? (w[0] == "was" || w[0] == "were")
                                : (w[0] == p.past && w[0] != p.lemma);
      vp.tense = past ? Tense::Past : Tense::Present;
    } else {
      vp.tense = Tense::Present;
    }
  }
  if (*vp.tense == Tense::Modal) {
    vp.kernel_infinitive = true;
  } else {
    vp.verb_words = lex.conjugate(kernel_lemma(vp, lex), *vp.tense, person, number);
    vp.kernel_infinitive = false;
  }
}

std::string realize_phrase(const NounPhrase& np) {
  std::vector<std::string> words;
  phrase_words(np, words);
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string realize_circumstance(const Circumstance& c) {
  std::vector<std::string> words;
  circumstance_words(c, words);
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string realize(const SentenceModel& m, const Lexicon& lex) {
  if (m.complexity != "simple") {
    throw Error(ErrorCode::NotSupported, "complexity '" + m.complexity + "' is not supported");
  }
  const VerbPhrase& vp = m.verb_phrase;
  std::vector<std::string> words;
  std::vector<std::string> verbs = verb_group(m, lex);

  auto complement = [&] {
    if (vp.predicate) predicate_words(*vp.predicate, words);
    if (vp.direct_object) phrase_words(*vp.direct_object, words);
  };

  switch (m.mood) {
    case Mood::Statement:
      phrase_words(m.subject, words);
      words.insert(words.end(), verbs.begin(), verbs.end());
      complement();
      break;
    case Mood::Question: {
      require_complete(m.subject);
      const bool query_adj = vp.predicate && vp.predicate->type == PredicateType::QueryAdj;
      const bool wh_subject = m.subject.head->type == HeadType::Relpron && !query_adj;
      auto rest_of_group = [&] { words.insert(words.end(), verbs.begin() + 1, verbs.end()); };
      if (wh_subject) {
        // What + be + predicate [+ been]
        words.push_back(m.subject.head->word);
        words.push_back(verbs.front());
        complement();
        rest_of_group();
      } else if (query_adj) {
        // How much + be + subject [+ been]
        words.push_back(vp.predicate->adjective.adverb);
        words.push_back(vp.predicate->adjective.adjective);
        words.push_back(verbs.front());
        phrase_words(m.subject, words);
        rest_of_group();
      } else {
        // be + subject [+ been] + complement
        words.push_back(verbs.front());
        phrase_words(m.subject, words);
        rest_of_group();
        complement();
      }
      break;
    }
    default:
      throw Error(ErrorCode::NotSupported,
                  "no word order for mood '" + std::string(to_string(m.mood)) + "'");
  }
  for (const auto& c : m.circumstances) circumstance_words(c, words);

  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  out += m.mood == Mood::Question ? "?" : ".";
  return out;
}

}  // namespace gte
