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

#include <stdexcept>

#include "gte/engine.hpp"
#include "gte/errors.hpp"
#include "gte/nlml.hpp"
#include "gte/text_parser.hpp"
#include "support.hpp"

using namespace gte;
using namespace gte::testing;

namespace {

SentenceModel parse(const std::string& text) { return parse_text(text, fixture().lexicon); }

std::vector<std::pair<int, std::string>> once(const std::string& text, const RuleSet& rules) {
  const auto& f = fixture();
  std::vector<std::pair<int, std::string>> out;
  for (const auto& r : entail_once(parse(text), rules, f.taxonomy, f.lexicon)) {
    out.emplace_back(r.rule_id, realize(r.model, f.lexicon));
  }
  return out;
}

std::vector<std::string> hyponyms(const std::string& text) {
  const auto& f = fixture();
  std::vector<std::string> out;
  for (const auto& h : logical_entail(parse(text), f.taxonomy, f.lexicon)) {
    out.push_back(realize(h.model, f.lexicon));
  }
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// Rule set with just the given core rules; reversed links to absent rules
// are dropped.
RuleSet subset(std::initializer_list<int> ids) {
  std::vector<Rule> rules;
  std::set<int> keep(ids);
  for (int id : ids) {
    Rule r = core_rule(id);
    if (r.reversed_id && !keep.count(*r.reversed_id)) r.reversed_id.reset();
    rules.push_back(std::move(r));
  }
  return RuleSet(std::move(rules));
}

}  // namespace

TEST_CASE("engine: entail_once examples") {
  const RuleSet& core = fixture().core;
  using V = std::vector<std::pair<int, std::string>>;
  CHECK(once("What is the price of the book?", core) == V{{1, "How much is the book?"}});
  CHECK(once("English is his mother language.", core) == V{{4, "He can speak English."}});
  CHECK(once("How much is the weather?", core).empty());
  CHECK(once("The student's name is Zhang.", core) == V{{2, "The student is Zhang."}});
  CHECK(once("I study in Beijing University.", core) == V{{3, "I attend Beijing University."}});
  CHECK(once("I attend Beijing University.", core) == V{{5, "I study in Beijing University."}});
}

TEST_CASE("engine: entail_once drops duplicates, keeping the first rule") {
  std::vector<Rule> rules = fixture().core.rules();
  Rule copy = core_rule(1);
  copy.id = 42;
  rules.push_back(copy);
  RuleSet with_copy(std::move(rules));
  using V = std::vector<std::pair<int, std::string>>;
  CHECK(once("What is the price of the book?", with_copy) == V{{1, "How much is the book?"}});
}

TEST_CASE("engine: transformer errors name the rule") {
  const auto& f = fixture();
  try {
    entail_once(parse("English is the student's mother language."), f.core, f.taxonomy,
                f.lexicon);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CaseChangeOnNonPronoun);
    CHECK(std::string(e.what()).rfind("rule 4:", 0) == 0);
  }
}

TEST_CASE("engine: logical entailment examples") {
  CHECK(hyponyms("Zhang is a student.") == std::vector<std::string>{"Zhang is a person."});
  CHECK(hyponyms("I have a dog.") == std::vector<std::string>{"I have an animal."});
  CHECK(hyponyms("I have a puppy.") == std::vector<std::string>{"I have a dog."});
  CHECK(hyponyms("They are students.").empty());
  CHECK(hyponyms("He can speak English.").empty());
  CHECK(hyponyms("How much is the book?").empty());
  CHECK(hyponyms("I study in Beijing University.").empty());
  CHECK(hyponyms("Zhang is my student.").empty());
  CHECK(hyponyms("Zhang is a price.").empty());

  const auto& f = fixture();
  auto hs = logical_entail(parse("Zhang is a student."), f.taxonomy, f.lexicon);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].word == "student");
  CHECK(hs[0].parent == "person");
}

TEST_CASE("engine: hyponym substitution keeps plural number") {
  Taxonomy tax = Taxonomy::from_text("dog\tanimal\n");
  const auto& lex = fixture().lexicon;
  SentenceModel s = parse("I have a dog.");
  s.verb_phrase.direct_object->premods[0].word = "the";
  s.verb_phrase.direct_object->head->word = "dogs";
  normalize_instance(s, lex);
  auto hs = logical_entail(s, tax, lex);
  REQUIRE(hs.size() == 1);
  CHECK(realize(hs[0].model, lex) == "I have the animals.");
}

TEST_CASE("engine: closure examples") {
  const RuleSet& core = fixture().core;
  auto genitive = entail_closure("The student's name is Zhang.", core, fixture().taxonomy,
                           fixture().lexicon);
  REQUIRE_FALSE(genitive.empty());
  CHECK(genitive[0].text == "The student is Zhang.");
  CHECK(genitive[0].depth == 1);
  CHECK(genitive[0].derivation == std::vector<DerivationStep>{DerivationStep::rule(2)});

  auto study = closure_texts("I study in Beijing University.", core, {5, LogicalMode::Fallback});
  CHECK(study == std::vector<std::string>{"I attend Beijing University."});

  auto zhang = entail_closure("Zhang is a student.", core, fixture().taxonomy, fixture().lexicon,
                              {2, LogicalMode::Fallback});
  REQUIRE_FALSE(zhang.empty());
  CHECK(zhang[0].text == "Zhang is a person.");
  CHECK(zhang[0].derivation[0].to_string() == "hyponym:student→person");

  CHECK(contains(closure_texts("I have a dog.", core), "I have an animal."));
  CHECK(closure_texts("How much is the weather?", core).empty());
}

TEST_CASE("engine: logical modes") {
  const RuleSet& ext = fixture().extended;
  auto fallback = closure_texts("Zhang is a teacher.", ext, {1, LogicalMode::Fallback});
  auto always = closure_texts("Zhang is a teacher.", ext, {1, LogicalMode::Always});
  auto off = closure_texts("Zhang is a student.", ext, {3, LogicalMode::Off});
  CHECK(fallback == std::vector<std::string>{"Zhang teaches."});
  CHECK(always == std::vector<std::string>{"Zhang teaches.", "Zhang is a person."});
  CHECK_FALSE(contains(off, "Zhang is a person."));
  CHECK(parse_logical_mode("always") == LogicalMode::Always);
  CHECK(parse_logical_mode("fallback") == LogicalMode::Fallback);
  CHECK(parse_logical_mode("off") == LogicalMode::Off);
  CHECK_FALSE(parse_logical_mode("sometimes"));
  CHECK(to_string(LogicalMode::Always) == "always");
}

TEST_CASE("engine: result invariants") {
  const auto& f = fixture();
  for (const char* text : {"What was the pen's price two years ago?", "Zhang is a teacher.",
                           "I study in Beijing University.", "John's father is a teacher.",
                           "The student's name was John five years ago."}) {
    CAPTURE(text);
    auto rs = entail_closure(text, f.extended, f.taxonomy, f.lexicon, {4, LogicalMode::Always});
    int last_depth = 1;
    std::set<std::string> texts;
    for (const auto& r : rs) {
      CHECK(r.depth == static_cast<int>(r.derivation.size()));
      CHECK(r.depth >= last_depth);
      last_depth = r.depth;
      CHECK(r.text == realize(r.model, f.lexicon));
      CHECK(r.text != text);
      CHECK(texts.insert(serialize_nlml(r.model)).second);
    }
  }
}

TEST_CASE("engine: reversed rules are not applied back to back") {
  RuleSet linked = subset({3, 5});
  auto rs = closure_texts("I study in Beijing University.", linked, {5, LogicalMode::Off});
  CHECK(rs == std::vector<std::string>{"I attend Beijing University."});
  auto back = closure_texts("I attend Beijing University.", linked, {5, LogicalMode::Off});
  CHECK(back == std::vector<std::string>{"I study in Beijing University."});
}

TEST_CASE("engine: termination with an adversarial reversed pair") {
  // Without reversed links the two rules ping-pong; dedup still ends it.
  std::vector<Rule> rules{core_rule(3), core_rule(5)};
  rules[0].reversed_id.reset();
  rules[1].reversed_id.reset();
  RuleSet unlinked(std::move(rules));
  auto rs = closure_texts("I studied in a school five years ago.", unlinked,
                          {10, LogicalMode::Always});
  const std::vector<std::string> expected{"I attended a school five years ago.",
                                          "I attended a group five years ago.",
                                          "I studied in a group five years ago."};
  CHECK(rs == expected);
  CHECK(closure_texts("I studied in a school five years ago.", subset({3, 5}),
                      {10, LogicalMode::Always}) == expected);
}

TEST_CASE("engine: determinism") {
  const auto& f = fixture();
  auto a = entail_closure("What was the pen's price two years ago?", f.extended, f.taxonomy,
                          f.lexicon, {3, LogicalMode::Always});
  auto b = entail_closure("What was the pen's price two years ago?", f.extended, f.taxonomy,
                          f.lexicon, {3, LogicalMode::Always});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].text == b[i].text);
    CHECK(a[i].derivation == b[i].derivation);
    CHECK(serialize_nlml(a[i].model) == serialize_nlml(b[i].model));
  }
}

TEST_CASE("engine: argument and coverage errors") {
  const auto& f = fixture();
  SentenceModel s = parse("Zhang is a student.");
  CHECK_THROWS_AS(entail_closure(s, f.core, f.taxonomy, f.lexicon, {0, LogicalMode::Fallback}),
                  std::invalid_argument);
  s.complexity = "compound";
  try {
    entail_closure(s, f.core, f.taxonomy, f.lexicon);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSupported);
  }
  try {
    entail_closure("Read a book.", f.core, f.taxonomy, f.lexicon);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfCoverage);
  }
}

TEST_CASE("engine: derivation step spelling") {
  CHECK(DerivationStep::rule(3).to_string() == "3");
  CHECK(DerivationStep::hyponym("dog", "animal").to_string() == "hyponym:dog→animal");
  CHECK(DerivationStep::rule(3).is_rule());
  CHECK_FALSE(DerivationStep::hyponym("dog", "animal").is_rule());
}

TEST_CASE("engine: knowledge base loading") {
  KnowledgeBase kb = KnowledgeBase::load({fixture_dir() / "rules" / "core.xml",
                                          fixture_dir() / "lexicon.tsv",
                                          fixture_dir() / "taxonomy.tsv", std::nullopt});
  CHECK(kb.rules.size() == 6);
  CHECK(kb.lexicon.verb_lemma("taught") == "teach");
  CHECK(kb.taxonomy.is_instance("student", "person"));
}
