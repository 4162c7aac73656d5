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

#include <doctest.h>

#include <map>
#include <tuple>

#include "gte/errors.hpp"
#include "gte/lexicon.hpp"
#include "gte/text_parser.hpp"
#include "support.hpp"

using namespace gte;
using namespace gte::testing;

namespace {

// Independent spelling oracle for third person singular present.
std::string third_sing_oracle(const std::string& v) {
  static const std::string vowels = "aeiou";
  if (v.size() >= 2 && v.back() == 'y' && vowels.find(v[v.size() - 2]) == std::string::npos) {
    return v.substr(0, v.size() - 1) + "ies";
  }
  for (const char* tail : {"s", "x", "z", "ch", "sh", "o"}) {
    std::string t = tail;
    if (v.size() >= t.size() && v.compare(v.size() - t.size(), t.size(), t) == 0) return v + "es";
  }
  return v + "s";
}

ErrorCode lexicon_error(std::string_view lex, std::string_view verbs = {}) {
  try {
    Lexicon::from_text(lex, verbs);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::NotSupported;
}

NounPhrase head_np(const std::string& word, HeadType type = HeadType::Noun) {
  NounPhrase np;
  np.head = Head{word, type, std::nullopt, std::nullopt};
  return np;
}

}  // namespace

TEST_CASE("lexicon: be over every person, number and tense") {
  const Lexicon& lex = fixture().lexicon;
  using Key = std::tuple<Tense, Person, Number>;
  const std::map<Key, std::vector<std::string>> table{
      {{Tense::Present, Person::First, Number::Sing}, {"am"}},
      {{Tense::Present, Person::Second, Number::Sing}, {"are"}},
      {{Tense::Present, Person::Third, Number::Sing}, {"is"}},
      {{Tense::Present, Person::First, Number::Plur}, {"are"}},
      {{Tense::Present, Person::Second, Number::Plur}, {"are"}},
      {{Tense::Present, Person::Third, Number::Plur}, {"are"}},
      {{Tense::Past, Person::First, Number::Sing}, {"was"}},
      {{Tense::Past, Person::Second, Number::Sing}, {"were"}},
      {{Tense::Past, Person::Third, Number::Sing}, {"was"}},
      {{Tense::Past, Person::First, Number::Plur}, {"were"}},
      {{Tense::Past, Person::Second, Number::Plur}, {"were"}},
      {{Tense::Past, Person::Third, Number::Plur}, {"were"}},
      {{Tense::PresentPerfect, Person::First, Number::Sing}, {"have", "been"}},
      {{Tense::PresentPerfect, Person::Second, Number::Sing}, {"have", "been"}},
      {{Tense::PresentPerfect, Person::Third, Number::Sing}, {"has", "been"}},
      {{Tense::PresentPerfect, Person::First, Number::Plur}, {"have", "been"}},
      {{Tense::PresentPerfect, Person::Second, Number::Plur}, {"have", "been"}},
      {{Tense::PresentPerfect, Person::Third, Number::Plur}, {"have", "been"}},
  };
  for (const auto& [key, expected] : table) {
    auto [t, p, n] = key;
    CAPTURE(to_string(t));
    CAPTURE(to_string(p));
    CAPTURE(to_string(n));
    CHECK(lex.conjugate("be", t, p, n) == expected);
  }
  CHECK(lex.conjugate("be", Tense::Modal, Person::Third, Number::Sing) ==
        std::vector<std::string>{"be"});
}

TEST_CASE("lexicon: conjugation examples") {
  const Lexicon& lex = fixture().lexicon;
  CHECK(lex.conjugate("study", Tense::Present, Person::Third, Number::Sing) ==
        std::vector<std::string>{"studies"});
  CHECK(lex.conjugate("study", Tense::Past, Person::First, Number::Sing) ==
        std::vector<std::string>{"studied"});
  CHECK(lex.conjugate("attend", Tense::Present, Person::First, Number::Sing) ==
        std::vector<std::string>{"attend"});
  CHECK(lex.conjugate("speak", Tense::Past, Person::Third, Number::Plur) ==
        std::vector<std::string>{"spoke"});
  CHECK(lex.conjugate("teach", Tense::Present, Person::Third, Number::Sing) ==
        std::vector<std::string>{"teaches"});
  CHECK(lex.conjugate("go", Tense::PresentPerfect, Person::Third, Number::Sing) ==
        std::vector<std::string>{"has", "gone"});
  CHECK(lex.conjugate("have", Tense::Present, Person::Third, Number::Sing) ==
        std::vector<std::string>{"has"});
  CHECK(lex.conjugate("speak", Tense::Modal, Person::First, Number::Sing) ==
        std::vector<std::string>{"speak"});
  CHECK_THROWS_AS(lex.conjugate("flibber", Tense::Present, Person::First, Number::Sing), Error);
}

TEST_CASE("lexicon: regular third person singular agrees with an independent oracle") {
  const Lexicon& lex = fixture().lexicon;
  int checked = 0;
  for (const auto& lemma : lex.verb_lemmas()) {
    if (lemma == "be" || lemma == "have") continue;
    VerbParadigm p = lex.paradigm(lemma);
    auto form = lex.conjugate(lemma, Tense::Present, Person::Third, Number::Sing);
    REQUIRE(form.size() == 1);
    CHECK(form[0] == p.third_sing_present);
    CHECK(form[0].back() == 's');
    CHECK(regular_third_sing(lemma) == third_sing_oracle(lemma));
    ++checked;
  }
  CHECK(checked > 10);
  for (const char* w : {"fly", "play", "fix", "buzz", "watch", "wash", "do", "kiss", "run"}) {
    CHECK(regular_third_sing(w) == third_sing_oracle(w));
  }
}

TEST_CASE("lexicon: regular past and plural") {
  CHECK(regular_past("study") == "studied");
  CHECK(regular_past("live") == "lived");
  CHECK(regular_past("play") == "played");
  CHECK(regular_past("attend") == "attended");
  CHECK(regular_plural("box") == "boxes");
  CHECK(regular_plural("city") == "cities");
  CHECK(fixture().lexicon.plural_of("child") == "children");
  CHECK(fixture().lexicon.plural_of("dog") == "dogs");
}

TEST_CASE("lexicon: possessive to nominative is total on possessive pronouns") {
  const std::map<std::string, std::string> table{{"my", "I"},     {"your", "you"}, {"his", "he"},
                                                 {"her", "she"},  {"its", "it"},   {"our", "we"},
                                                 {"their", "they"}};
  for (const auto& [poss, nom] : table) {
    CHECK(is_possessive_pronoun(poss));
    CHECK(possessive_to_nominative(poss) == nom);
  }
  CHECK(possessive_to_nominative("My") == "I");
  int count = 0;
  for (const auto& e : fixture().lexicon.entries()) {
    if (e.pos != Pos::PossessivePronoun) continue;
    ++count;
    CHECK_NOTHROW(possessive_to_nominative(e.surface));
  }
  CHECK(count == 7);
  for (const char* w : {"the", "he", "mine", ""}) {
    CAPTURE(w);
    try {
      possessive_to_nominative(w);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPossessive);
    }
  }
}

TEST_CASE("lexicon: modal auxiliaries") {
  for (const char* w : {"can", "could", "will", "would", "may", "might", "must", "should", "shall",
                        "Can"}) {
    CHECK(is_modal(w));
  }
  CHECK_FALSE(is_modal("speak"));
  CHECK_FALSE(is_modal("has"));
}

TEST_CASE("lexicon: lemmas and lookup") {
  const Lexicon& lex = fixture().lexicon;
  CHECK(lex.noun_lemma("students") == "student");
  CHECK(lex.noun_lemma("Student") == "student");
  CHECK(lex.noun_lemma("children") == "child");
  CHECK(lex.noun_lemma("English") == "english");
  CHECK(lex.noun_lemma("zorblax") == "zorblax");
  CHECK(lex.verb_lemma("studies") == "study");
  CHECK(lex.verb_lemma("taught") == "teach");
  CHECK(lex.verb_lemma("were") == "be");
  CHECK(lex.verb_lemma("Has") == "have");
  CHECK_FALSE(lex.verb_lemma("book").has_value());
  CHECK(lex.has("the", Pos::Article));
  CHECK_FALSE(lex.has("the", Pos::Noun));
  REQUIRE(lex.lookup("English", Pos::Name));
  CHECK(lex.lookup("English", Pos::Name)->categories.count("language") == 1);
  CHECK(lex.warnings().empty());
}

TEST_CASE("lexicon: agreement of a noun phrase head") {
  const Lexicon& lex = fixture().lexicon;
  using P = std::pair<Person, Number>;
  CHECK(lex.agreement_of(head_np("I")) == P{Person::First, Number::Sing});
  CHECK(lex.agreement_of(head_np("we")) == P{Person::First, Number::Plur});
  CHECK(lex.agreement_of(head_np("you")) == P{Person::Second, Number::Sing});
  CHECK(lex.agreement_of(head_np("students")) == P{Person::Third, Number::Plur});
  CHECK(lex.agreement_of(head_np("student")) == P{Person::Third, Number::Sing});
  CHECK(lex.agreement_of(head_np("Zhang", HeadType::Name)) == P{Person::Third, Number::Sing});
  CHECK(lex.agreement_of(head_np("qwerty")) == P{Person::Third, Number::Sing});
  CHECK(lex.agreement_of(NounPhrase{}) == P{Person::Third, Number::Sing});
}

TEST_CASE("lexicon: malformed rows") {
  CHECK(lexicon_error("dog\tdog\tnoun\tthird\n") == ErrorCode::BadRow);
  CHECK(lexicon_error("dog\tdog\tgizmo\tthird\tsing\t-\n") == ErrorCode::BadRow);
  CHECK(lexicon_error("dog\tdog\tnoun\tfourth\tsing\t-\n") == ErrorCode::BadRow);
  CHECK(lexicon_error("dog\tdog\tnoun\tthird\tdual\t-\n") == ErrorCode::BadRow);
  CHECK(lexicon_error("", "go\tgoes\twent\n") == ErrorCode::BadRow);
  try {
    Lexicon::from_text("# header\n\ndog\tdog\tnoun\tthird\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    Lexicon::load("/nonexistent/lexicon.tsv");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("lexicon: duplicate rows warn and the last one wins") {
  Lexicon lex = Lexicon::from_text(
      "dog\tdog\tnoun\tthird\tsing\tanimal\n"
      "dog\tdog\tnoun\tthird\tsing\tpet\n"
      "dog\tdog\tverb\t-\t-\t-\n");
  REQUIRE(lex.warnings().size() == 1);
  CHECK(lex.warnings()[0].find("dog") != std::string::npos);
  const LexiconEntry* e = lex.lookup("dog", Pos::Noun);
  REQUIRE(e);
  CHECK(e->categories == std::set<std::string>{"pet"});
  CHECK(lex.lookup("dog").size() == 2);
}

TEST_CASE("lexicon: paradigm rows override regular rules") {
  Lexicon lex = Lexicon::from_text("", "swim\tswims\tswam\tswum\n");
  CHECK(lex.is_verb("swim"));
  CHECK(lex.verb_lemma("swam") == "swim");
  CHECK(lex.conjugate("swim", Tense::PresentPerfect, Person::First, Number::Plur) ==
        std::vector<std::string>{"have", "swum"});
}

TEST_CASE("lexicon: indefinite article by initial sound") {
  CHECK(indefinite_article("animal") == "an");
  CHECK(indefinite_article("person") == "a");
  CHECK(indefinite_article("university") == "a");
  CHECK(indefinite_article("European") == "a");
  CHECK(indefinite_article("hour") == "an");
  CHECK(indefinite_article("umbrella") == "an");
  CHECK(indefinite_article("") == "a");
}
