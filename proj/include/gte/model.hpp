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

// Typed object model of one simple English sentence. The same structure
// serves as a concrete sentence (instance), a rule's left side (pattern,
// may hold pseudo slots and category constraints) and a rule's right side
// (template, may additionally set verb_change).

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gte {

// Owning, deep-copying, nullable pointer. Gives recursive structs value
// semantics.
template <typename T>
class Box {
 public:
  Box() = default;
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  bool has_value() const { return ptr_ != nullptr; }
  explicit operator bool() const { return has_value(); }
  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }
  void reset() { ptr_.reset(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.ptr_ || !b.ptr_) return !a.ptr_ && !b.ptr_;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::unique_ptr<T> ptr_;
};

enum class Mood { Statement, Question, Imperative, Exclamative };
enum class Tense { Present, Past, PresentPerfect, Modal };
enum class Person { First, Second, Third };
enum class Number { Sing, Plur };
enum class Voice { Active, Passive };
enum class Grad { Abso, Comp, Super };
enum class VerbType { Be, Verb, VerbObject };
enum class HeadType { Noun, Name, Relpron };
enum class PremodKind { Article, Possessive, Noun, Address };
enum class SlotKind { NounPhrase, Word, Possessive };
enum class PredicateType { Np, QueryAdj, Adj };
enum class CircumKind { PrepPhrase, Adverbial };
enum class Flavor { Instance, Pattern, Template };

// NLML spellings. The parse_* functions return nullopt for values outside
// the closed sets.
std::string_view to_string(Mood v);
std::string_view to_string(Tense v);
std::string_view to_string(Person v);
std::string_view to_string(Number v);
std::string_view to_string(Voice v);
std::string_view to_string(Grad v);
std::string_view to_string(VerbType v);
std::string_view to_string(HeadType v);
std::string_view to_string(PremodKind v);
std::string_view to_string(SlotKind v);
std::string_view to_string(PredicateType v);
std::string_view to_string(CircumKind v);
std::string_view to_string(Flavor v);

std::optional<Mood> parse_mood(std::string_view s);
std::optional<Tense> parse_tense(std::string_view s);
std::optional<Person> parse_person(std::string_view s);
std::optional<Number> parse_number(std::string_view s);
std::optional<Voice> parse_voice(std::string_view s);
std::optional<Grad> parse_grad(std::string_view s);
std::optional<VerbType> parse_verb_type(std::string_view s);
std::optional<HeadType> parse_head_type(std::string_view s);
std::optional<PremodKind> parse_premod_kind(std::string_view s);
std::optional<SlotKind> parse_slot_kind(std::string_view s);
std::optional<PredicateType> parse_predicate_type(std::string_view s);
std::optional<CircumKind> parse_circum_kind(std::string_view s);
std::optional<Flavor> parse_flavor(std::string_view s);

struct PseudoSlot {
  int index = 1;
  SlotKind kind = SlotKind::NounPhrase;

  bool operator==(const PseudoSlot&) const = default;
};

struct NounPhrase;
struct PrepPhrase;

// Word before the head noun. A possessive premodifier holds either a
// pronoun in `word` ("his") or a genitive noun phrase in `possessor`
// ("the pen" of "the pen's").
struct Premodifier {
  PremodKind kind = PremodKind::Article;
  std::string word;
  Box<NounPhrase> possessor;
  std::optional<PseudoSlot> pseudo;

  bool operator==(const Premodifier&) const = default;
};

struct Head {
  std::string word;
  HeadType type = HeadType::Noun;
  std::optional<Person> person;
  std::optional<Number> number;

  bool operator==(const Head&) const = default;
};

struct NounPhrase {
  std::vector<Premodifier> premods;
  std::optional<Head> head;
  // Pattern-only: the head must be an instance of this taxonomy node.
  std::optional<std::string> category;
  // Pattern-only, pseudo noun phrases: required head type of the bound phrase.
  std::optional<HeadType> type_constraint;
  std::vector<PrepPhrase> postmods;
  // When set every other field except the two constraints is empty.
  std::optional<PseudoSlot> pseudo;

  bool operator==(const NounPhrase&) const;
};

struct PrepPhrase {
  std::string preposition;
  NounPhrase object;

  bool operator==(const PrepPhrase&) const = default;
};

struct QueryAdjective {
  std::string adverb_type;  // "extent" for how
  std::string adverb;       // empty for a bare adjective predicate
  std::string adjective;
  Grad grad = Grad::Abso;

  bool operator==(const QueryAdjective&) const = default;
};

struct Predicate {
  PredicateType type = PredicateType::Np;
  NounPhrase noun_phrase;     // type == Np
  QueryAdjective adjective;   // type == QueryAdj or Adj

  bool operator==(const Predicate&) const = default;
};

struct VerbPhrase {
  VerbType verb_type = VerbType::Be;
  Voice voice = Voice::Active;
  std::optional<Tense> tense;
  std::optional<Person> person;
  std::optional<Number> number;
  std::vector<std::string> verb_words;
  bool kernel_infinitive = false;
  std::optional<Predicate> predicate;
  std::optional<NounPhrase> direct_object;
  bool verb_change = false;

  bool operator==(const VerbPhrase&) const = default;
};

struct Circumstance {
  CircumKind kind = CircumKind::PrepPhrase;
  PrepPhrase prep_phrase;           // kind == PrepPhrase
  std::vector<std::string> tokens;  // kind == Adverbial, e.g. {"two","years","ago"}

  bool operator==(const Circumstance&) const = default;
};

struct SentenceModel {
  Mood mood = Mood::Statement;
  std::string complexity = "simple";
  NounPhrase subject;
  VerbPhrase verb_phrase;
  std::vector<Circumstance> circumstances;
  Flavor flavor = Flavor::Instance;

  bool operator==(const SentenceModel&) const = default;
};

inline bool NounPhrase::operator==(const NounPhrase& o) const {
  return premods == o.premods && head == o.head && category == o.category &&
         type_constraint == o.type_constraint && postmods == o.postmods && pseudo == o.pseudo;
}

// Convenience constructors.
NounPhrase pseudo_phrase(int index, std::optional<std::string> category = std::nullopt);

// Visits every pseudo slot in the model, in document order.
std::vector<PseudoSlot> collect_pseudo_slots(const SentenceModel& model);
bool has_category_constraint(const SentenceModel& model);

}  // namespace gte
