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

#include "gte/matcher.hpp"

#include "gte/lexicon.hpp"
#include "gte/taxonomy.hpp"
#include "gte/text_parser.hpp"

namespace gte {

namespace {

// Articles differ only in spelling before vowels.
std::string function_word(std::string_view w) {
  std::string l = to_lower(w);
  return l == "an" ? "a" : l;
}

class Matcher {
 public:
  Matcher(const Taxonomy& tax, const Lexicon& lex) : tax_(tax), lex_(lex) {}

  bool bind(const PseudoSlot& slot, Fragment f, Binding& b) const {
    f.kind = slot.kind;
    auto [it, fresh] = b.emplace(slot.index, f);
    return fresh || it->second == f;
  }

  bool head_matches(const Head& p, const Head& s) const {
    if (p.type != s.type) return false;
    return lex_.noun_lemma(p.word) == lex_.noun_lemma(s.word);
  }

  bool premod(const Premodifier& p, const Premodifier& s, Binding& b) const {
    if (p.kind != s.kind) return false;
    if (p.pseudo) {
      Fragment f;
      switch (p.pseudo->kind) {
        case SlotKind::Possessive:
          f.possessive = s;
          f.possessive.pseudo.reset();
          break;
        case SlotKind::Word:
          if (s.possessor) return false;
          f.word = s.word;
          break;
        case SlotKind::NounPhrase:
          if (!s.possessor) return false;
          f.phrase = *s.possessor;
          break;
      }
      return bind(*p.pseudo, std::move(f), b);
    }
    if (p.possessor) return s.possessor && noun_phrase(*p.possessor, *s.possessor, b);
    if (s.possessor) return false;
    return function_word(p.word) == function_word(s.word);
  }

  bool noun_phrase(const NounPhrase& p, const NounPhrase& s, Binding& b) const {
    if (p.category && !in_category(s, *p.category, tax_, lex_)) return false;
    if (p.pseudo) {
      if (p.type_constraint && (!s.head || s.head->type != *p.type_constraint)) return false;
      Fragment f;
      f.phrase = s;
      return bind(*p.pseudo, std::move(f), b);
    }
    if (p.premods.size() != s.premods.size() || p.postmods.size() != s.postmods.size()) {
      return false;
    }
    if (p.head.has_value() != s.head.has_value()) return false;
    if (p.head && !head_matches(*p.head, *s.head)) return false;
    for (std::size_t i = 0; i < p.premods.size(); ++i) {
      if (!premod(p.premods[i], s.premods[i], b)) return false;
    }
    for (std::size_t i = 0; i < p.postmods.size(); ++i) {
      if (!prep_phrase(p.postmods[i], s.postmods[i], b)) return false;
    }
    return true;
  }

  bool prep_phrase(const PrepPhrase& p, const PrepPhrase& s, Binding& b) const {
    return to_lower(p.preposition) == to_lower(s.preposition) &&
           noun_phrase(p.object, s.object, b);
  }

  bool predicate(const Predicate& p, const Predicate& s, Binding& b) const {
    if (p.type != s.type) return false;
    if (p.type == PredicateType::Np) return noun_phrase(p.noun_phrase, s.noun_phrase, b);
    return to_lower(p.adjective.adverb) == to_lower(s.adjective.adverb) &&
           to_lower(p.adjective.adjective) == to_lower(s.adjective.adjective);
  }

  bool verb_phrase(const VerbPhrase& p, const VerbPhrase& s, Binding& b) const {
    if (p.verb_type != s.verb_type || p.voice != s.voice) return false;
    if (p.verb_type != VerbType::Be && kernel_lemma(p, lex_) != kernel_lemma(s, lex_)) {
      return false;
    }
    // A modal auxiliary written into the pattern is a lexical requirement.
    if (p.verb_words.size() >= 2 && is_modal(p.verb_words.front())) {
      if (s.verb_words.size() < 2 || to_lower(s.verb_words.front()) != to_lower(p.verb_words.front())) {
        return false;
      }
    }
    if (p.predicate.has_value() != s.predicate.has_value()) return false;
    if (p.predicate && !predicate(*p.predicate, *s.predicate, b)) return false;
    if (p.direct_object.has_value() != s.direct_object.has_value()) return false;
    if (p.direct_object && !noun_phrase(*p.direct_object, *s.direct_object, b)) return false;
    return true;
  }

  bool circumstance(const Circumstance& p, const Circumstance& s, Binding& b) const {
    if (p.kind != s.kind) return false;
    if (p.kind == CircumKind::PrepPhrase) return prep_phrase(p.prep_phrase, s.prep_phrase, b);
    if (p.tokens.size() != s.tokens.size()) return false;
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
      if (to_lower(p.tokens[i]) != to_lower(s.tokens[i])) return false;
    }
    return true;
  }

  // Each pattern circumstance takes the first unused sentence circumstance
  // that matches it.
  bool circumstances(const std::vector<Circumstance>& p, const std::vector<Circumstance>& s,
                     Binding& b, std::vector<Circumstance>& carried) const {
    std::vector<bool> used(s.size(), false);
    for (const auto& pc : p) {
      bool found = false;
      for (std::size_t i = 0; i < s.size() && !found; ++i) {
        if (used[i]) continue;
        Binding attempt = b;
        if (circumstance(pc, s[i], attempt)) {
          b = std::move(attempt);
          used[i] = true;
          found = true;
        }
      }
      if (!found) return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!used[i]) carried.push_back(s[i]);
    }
    return true;
  }

 private:
  const Taxonomy& tax_;
  const Lexicon& lex_;
};

}  // namespace

std::string_view to_string(MatchStage stage) {
  switch (stage) {
    case MatchStage::Mood: return "mood";
    case MatchStage::Subject: return "subject";
    case MatchStage::VerbPhrase: return "verb_phrase";
    case MatchStage::Circumstances: return "circumstances";
  }
  return "?";
}

bool in_category(const NounPhrase& np, std::string_view category, const Taxonomy& taxonomy,
                 const Lexicon& lexicon) {
  if (!np.head || np.head->type == HeadType::Relpron) return false;
  const std::string cat = to_lower(category);
  if (taxonomy.is_instance(lexicon.noun_lemma(np.head->word), cat)) return true;
  for (const LexiconEntry* e : lexicon.lookup(np.head->word)) {
    if (e->pos != Pos::Noun && e->pos != Pos::Name) continue;
    for (const auto& c : e->categories) {
      if (c == cat || taxonomy.is_instance(c, cat)) return true;
    }
  }
  return false;
}

std::optional<MatchOutcome> match(const SentenceModel& pattern, const SentenceModel& sentence,
                                  const Taxonomy& taxonomy, const Lexicon& lexicon,
                                  MatchTrace* trace) {
  Matcher m(taxonomy, lexicon);
  MatchOutcome out;
  auto stage = [&](MatchStage s, bool ok) {
    if (trace) {
      trace->compared.push_back(s);
      if (!ok) trace->failed_at = s;
    }
    return ok;
  };

  if (!stage(MatchStage::Mood,
             pattern.mood == sentence.mood && pattern.complexity == sentence.complexity)) {
    return std::nullopt;
  }
  if (!stage(MatchStage::Subject, m.noun_phrase(pattern.subject, sentence.subject, out.binding))) {
    return std::nullopt;
  }
  if (!stage(MatchStage::VerbPhrase,
             m.verb_phrase(pattern.verb_phrase, sentence.verb_phrase, out.binding))) {
    return std::nullopt;
  }
  if (!stage(MatchStage::Circumstances,
             m.circumstances(pattern.circumstances, sentence.circumstances, out.binding,
                             out.carried_circumstances))) {
    return std::nullopt;
  }

  const VerbPhrase& vp = sentence.verb_phrase;
  out.source_tense = vp.tense.value_or(Tense::Present);
  if (out.source_tense == Tense::Modal && !vp.verb_words.empty()) {
    out.source_modal = to_lower(vp.verb_words.front());
  }
  out.source_agreement = lexicon.agreement_of(sentence.subject);
  return out;
}

}  // namespace gte
