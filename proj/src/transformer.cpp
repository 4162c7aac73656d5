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

#include "gte/transformer.hpp"

#include "gte/errors.hpp"
#include "gte/lexicon.hpp"
#include "gte/text_parser.hpp"

namespace gte {

namespace {

class Substituter {
 public:
  explicit Substituter(const Binding& b) : binding_(b) {}

  const Fragment& lookup(int index) const {
    auto it = binding_.find(index);
    if (it == binding_.end()) {
      throw Error(ErrorCode::MissingBinding,
                  "pseudo variable " + std::to_string(index) + " has no binding");
    }
    return it->second;
  }

  void noun_phrase(NounPhrase& np) const {
    if (np.pseudo) {
      np = phrase_for(lookup(np.pseudo->index));
      return;
    }
    for (auto& p : np.premods) premod(p);
    for (auto& pp : np.postmods) noun_phrase(pp.object);
  }

  void premod(Premodifier& p) const {
    if (p.pseudo) {
      const Fragment& f = lookup(p.pseudo->index);
      PremodKind kind = p.kind;
      switch (f.kind) {
        case SlotKind::Possessive:
          p = f.possessive;
          break;
        case SlotKind::Word:
          p = Premodifier{};
          p.word = f.word;
          break;
        case SlotKind::NounPhrase:
          // A noun phrase in determiner position becomes a genitive.
          p = Premodifier{};
          p.possessor = f.phrase;
          kind = PremodKind::Possessive;
          break;
      }
      p.kind = kind;
      p.pseudo.reset();
      return;
    }
    if (p.possessor) {
      NounPhrase& owner = *p.possessor;
      if (owner.pseudo) {
        const Fragment& f = lookup(owner.pseudo->index);
        if (f.kind == SlotKind::Possessive) {
          p = f.possessive;
          p.kind = PremodKind::Possessive;
          return;
        }
      }
      noun_phrase(owner);
    }
  }

 private:
  static NounPhrase phrase_for(const Fragment& f) {
    switch (f.kind) {
      case SlotKind::NounPhrase:
        return f.phrase;
      case SlotKind::Word: {
        NounPhrase np;
        np.head = Head{f.word, HeadType::Noun, std::nullopt, std::nullopt};
        return np;
      }
      case SlotKind::Possessive: {
        if (f.possessive.possessor || f.possessive.word.empty()) {
          std::string shown = f.possessive.possessor ? realize_phrase(*f.possessive.possessor) + "'s"
                                                     : f.possessive.word;
          throw Error(ErrorCode::CaseChangeOnNonPronoun,
                      "'" + shown + "' is not a possessive pronoun");
        }
        NounPhrase np;
        np.head = Head{possessive_to_nominative(f.possessive.word), HeadType::Noun, std::nullopt,
                       std::nullopt};
        return np;
      }
    }
    return {};
  }

  const Binding& binding_;
};

}  // namespace

SentenceModel instantiate(const SentenceModel& templ, const MatchOutcome& outcome,
                          const Lexicon& lexicon) {
  SentenceModel m = templ;
  Substituter sub(outcome.binding);
  sub.noun_phrase(m.subject);
  VerbPhrase& vp = m.verb_phrase;
  if (vp.predicate && vp.predicate->type == PredicateType::Np) sub.noun_phrase(vp.predicate->noun_phrase);
  if (vp.direct_object) sub.noun_phrase(*vp.direct_object);
  for (auto& c : m.circumstances) {
    if (c.kind == CircumKind::PrepPhrase) sub.noun_phrase(c.prep_phrase.object);
  }

  if (vp.verb_change) {
    std::string lemma = kernel_lemma(vp, lexicon);
    vp.tense = outcome.source_tense;
    if (outcome.source_tense == Tense::Modal) {
      vp.verb_words = {outcome.source_modal.value_or("can"), lemma};
    } else {
      vp.verb_words = {lemma};
    }
    vp.verb_change = false;
  }
  m.circumstances.insert(m.circumstances.end(), outcome.carried_circumstances.begin(),
                         outcome.carried_circumstances.end());
  m.flavor = Flavor::Instance;
  normalize_instance(m, lexicon);
  return m;
}

std::optional<SentenceModel> apply_rule(const Rule& rule, const SentenceModel& sentence,
                                        const Taxonomy& taxonomy, const Lexicon& lexicon) {
  auto outcome = match(rule.pattern, sentence, taxonomy, lexicon);
  if (!outcome) return std::nullopt;
  return instantiate(rule.templ, *outcome, lexicon);
}

}  // namespace gte
