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

#include "gte/model.hpp"

#include <array>
#include <utility>

namespace gte {

namespace {

template <typename E, std::size_t N>
using Names = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view name_of(const Names<E, N>& names, E v) {
  for (const auto& [e, s] : names) {
    if (e == v) return s;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const Names<E, N>& names, std::string_view s) {
  for (const auto& [e, n] : names) {
    if (n == s) return e;
  }
  return std::nullopt;
}

constexpr Names<Mood, 4> kMood{{{Mood::Statement, "statement"},
                                {Mood::Question, "question"},
                                {Mood::Imperative, "imperative"},
                                {Mood::Exclamative, "exclamative"}}};
constexpr Names<Tense, 4> kTense{{{Tense::Present, "present"},
                                  {Tense::Past, "past"},
                                  {Tense::PresentPerfect, "present_perfect"},
                                  {Tense::Modal, "modal"}}};
constexpr Names<Person, 3> kPerson{
    {{Person::First, "first"}, {Person::Second, "second"}, {Person::Third, "third"}}};
constexpr Names<Number, 2> kNumber{{{Number::Sing, "sing"}, {Number::Plur, "plur"}}};
constexpr Names<Voice, 2> kVoice{{{Voice::Active, "active"}, {Voice::Passive, "passive"}}};
constexpr Names<Grad, 3> kGrad{{{Grad::Abso, "abso"}, {Grad::Comp, "comp"}, {Grad::Super, "super"}}};
constexpr Names<VerbType, 3> kVerbType{
    {{VerbType::Be, "be"}, {VerbType::Verb, "verb"}, {VerbType::VerbObject, "verb_object"}}};
constexpr Names<HeadType, 3> kHeadType{
    {{HeadType::Noun, "noun"}, {HeadType::Name, "name"}, {HeadType::Relpron, "relpron"}}};
constexpr Names<PremodKind, 4> kPremod{{{PremodKind::Article, "art"},
                                        {PremodKind::Possessive, "possessive"},
                                        {PremodKind::Noun, "noun"},
                                        {PremodKind::Address, "address"}}};
constexpr Names<SlotKind, 3> kSlot{{{SlotKind::NounPhrase, "noun_phrase"},
                                    {SlotKind::Word, "word"},
                                    {SlotKind::Possessive, "possessive"}}};
constexpr Names<PredicateType, 3> kPredicate{{{PredicateType::Np, "np"},
                                              {PredicateType::QueryAdj, "query_adj"},
                                              {PredicateType::Adj, "adj"}}};
constexpr Names<CircumKind, 2> kCircum{
    {{CircumKind::PrepPhrase, "prep_phrase"}, {CircumKind::Adverbial, "adverbial"}}};
constexpr Names<Flavor, 3> kFlavor{
    {{Flavor::Instance, "instance"}, {Flavor::Pattern, "pattern"}, {Flavor::Template, "template"}}};

void collect_np(const NounPhrase& np, std::vector<PseudoSlot>& out) {
  if (np.pseudo) out.push_back(*np.pseudo);
  for (const auto& p : np.premods) {
    if (p.pseudo) out.push_back(*p.pseudo);
    if (p.possessor) collect_np(*p.possessor, out);
  }
  for (const auto& pp : np.postmods) collect_np(pp.object, out);
}

bool np_has_category(const NounPhrase& np) {
  if (np.category) return true;
  for (const auto& p : np.premods) {
    if (p.possessor && np_has_category(*p.possessor)) return true;
  }
  for (const auto& pp : np.postmods) {
    if (np_has_category(pp.object)) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Mood v) { return name_of(kMood, v); }
std::string_view to_string(Tense v) { return name_of(kTense, v); }
std::string_view to_string(Person v) { return name_of(kPerson, v); }
std::string_view to_string(Number v) { return name_of(kNumber, v); }
std::string_view to_string(Voice v) { return name_of(kVoice, v); }
std::string_view to_string(Grad v) { return name_of(kGrad, v); }
std::string_view to_string(VerbType v) { return name_of(kVerbType, v); }
std::string_view to_string(HeadType v) { return name_of(kHeadType, v); }
std::string_view to_string(PremodKind v) { return name_of(kPremod, v); }
std::string_view to_string(SlotKind v) { return name_of(kSlot, v); }
std::string_view to_string(PredicateType v) { return name_of(kPredicate, v); }
std::string_view to_string(CircumKind v) { return name_of(kCircum, v); }
std::string_view to_string(Flavor v) { return name_of(kFlavor, v); }

std::optional<Mood> parse_mood(std::string_view s) { return value_of(kMood, s); }
std::optional<Tense> parse_tense(std::string_view s) { return value_of(kTense, s); }
std::optional<Person> parse_person(std::string_view s) { return value_of(kPerson, s); }
std::optional<Number> parse_number(std::string_view s) { return value_of(kNumber, s); }
std::optional<Voice> parse_voice(std::string_view s) { return value_of(kVoice, s); }
std::optional<Grad> parse_grad(std::string_view s) { return value_of(kGrad, s); }
std::optional<VerbType> parse_verb_type(std::string_view s) { return value_of(kVerbType, s); }
std::optional<HeadType> parse_head_type(std::string_view s) { return value_of(kHeadType, s); }
std::optional<PremodKind> parse_premod_kind(std::string_view s) { return value_of(kPremod, s); }
std::optional<SlotKind> parse_slot_kind(std::string_view s) { return value_of(kSlot, s); }
std::optional<PredicateType> parse_predicate_type(std::string_view s) {
  return value_of(kPredicate, s);
}
std::optional<CircumKind> parse_circum_kind(std::string_view s) { return value_of(kCircum, s); }
std::optional<Flavor> parse_flavor(std::string_view s) { return value_of(kFlavor, s); }

NounPhrase pseudo_phrase(int index, std::optional<std::string> category) {
  NounPhrase np;
  np.pseudo = PseudoSlot{index, SlotKind::NounPhrase};
  np.category = std::move(category);
  return np;
}

std::vector<PseudoSlot> collect_pseudo_slots(const SentenceModel& model) {
  std::vector<PseudoSlot> out;
  collect_np(model.subject, out);
  const auto& vp = model.verb_phrase;
  if (vp.predicate && vp.predicate->type == PredicateType::Np) {
    collect_np(vp.predicate->noun_phrase, out);
  }
  if (vp.direct_object) collect_np(*vp.direct_object, out);
  for (const auto& c : model.circumstances) {
    if (c.kind == CircumKind::PrepPhrase) collect_np(c.prep_phrase.object, out);
  }
  return out;
}

bool has_category_constraint(const SentenceModel& model) {
  const auto& vp = model.verb_phrase;
  if (np_has_category(model.subject)) return true;
  if (vp.predicate && vp.predicate->type == PredicateType::Np &&
      np_has_category(vp.predicate->noun_phrase)) {
    return true;
  }
  if (vp.direct_object && np_has_category(*vp.direct_object)) return true;
  for (const auto& c : model.circumstances) {
    if (c.kind == CircumKind::PrepPhrase && np_has_category(c.prep_phrase.object)) return true;
  }
  return false;
}

}  // namespace gte
