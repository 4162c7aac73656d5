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

#include <algorithm>

#include "gte/errors.hpp"
#include "gte/rules.hpp"
#include "support.hpp"

using namespace gte;
using namespace gte::testing;

namespace {

// "X is a teacher -> X teaches"; the test cases mutate this text.
const std::string kRule = R"(<rule id="7" name="teacher">
  <pattern>
    <sentence>
      <mood>statement</mood>
      <complexity>simple</complexity>
      <subject><noun><word>pseudo variable 1</word><category>person</category><type>noun</type></noun></subject>
      <verb_phrase>
        <verb_type>be</verb_type>
        <verb_word>is</verb_word>
        <predicate>
          <predicate_type>np</predicate_type>
          <prem><type>art</type><word>a</word></prem>
          <noun><word>teacher</word><type>noun</type></noun>
        </predicate>
      </verb_phrase>
    </sentence>
  </pattern>
  <entailment>
    <sentence>
      <mood>statement</mood>
      <complexity>simple</complexity>
      <subject>pseudo variable 1</subject>
      <verb_phrase>
        <verb_change/>
        <verb_type>verb</verb_type>
        <verb_word>teach</verb_word>
      </verb_phrase>
    </sentence>
  </entailment>
  <example source="Li is a teacher." expect="Li teaches."/>
</rule>
)";

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  s.replace(at, from.size(), to);
  return s;
}

std::string wrap(const std::string& rules) { return "<rules>\n" + rules + "</rules>\n"; }

ErrorCode load_error(const std::string& xml) {
  try {
    parse_rules(xml);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::NotSupported;
}

std::vector<FindingKind> kinds(const std::vector<Finding>& fs) {
  std::vector<FindingKind> out;
  for (const auto& f : fs) out.push_back(f.kind);
  return out;
}

}  // namespace

TEST_CASE("rules: core fixture loads in file order with reversed links") {
  const RuleSet& core = fixture().core;
  REQUIRE(core.size() == 6);
  std::vector<int> ids;
  for (const auto& r : core) ids.push_back(r.id);
  CHECK(ids == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(core.find(3)->reversed_id == 5);
  CHECK(core.find(5)->reversed_id == 3);
  CHECK_FALSE(core.find(2)->reversed_id);
  CHECK_FALSE(core.find(4)->reversed_id);
  CHECK(core.find(99) == nullptr);
  for (const auto& r : core) {
    CHECK(r.pattern.flavor == Flavor::Pattern);
    CHECK(r.templ.flavor == Flavor::Template);
    CHECK_FALSE(r.examples.empty());
  }
}

TEST_CASE("rules: reversed linkage is an involution") {
  for (const RuleSet* set : {&fixture().core, &fixture().extended}) {
    for (const auto& r : *set) {
      if (!r.reversed_id) continue;
      const Rule* partner = set->find(*r.reversed_id);
      REQUIRE(partner);
      CHECK(partner->reversed_id == r.id);
    }
  }
}

TEST_CASE("rules: fixture rules agree with the listed rule sides") {
  // R1 in the fixture spells out the article before "price"; R2 is written
  // in its genitive form. The other rule sides are used as is.
  CHECK(core_rule(3).pattern == load_markup("r3_pattern"));
  CHECK(core_rule(3).templ == load_markup("r3_entailment", Flavor::Template));
  CHECK(core_rule(4).pattern == load_markup("r4_pattern"));
  CHECK(core_rule(4).templ == load_markup("r4_entailment", Flavor::Template));
  CHECK(core_rule(1).templ == load_markup("r1_entailment", Flavor::Template));
}

TEST_CASE("rules: a handwritten rule parses") {
  RuleSet set = parse_rules(wrap(kRule));
  REQUIRE(set.size() == 1);
  const Rule& r = set.rules()[0];
  CHECK(r.id == 7);
  CHECK(r.name == "teacher");
  CHECK(r.examples == std::vector<RuleExample>{{"Li is a teacher.", "Li teaches."}});
  CHECK(r.pattern.subject.category == "person");
  CHECK(r.templ.verb_phrase.verb_change);
  CHECK(parse_rule(kRule) == r);
  CHECK(validate(r, &fixture().taxonomy).empty());
}

TEST_CASE("rules: load errors") {
  SUBCASE("unbound template variable") {
    std::string bad = replaced(kRule, "<subject>pseudo variable 1</subject>",
                               "<subject>pseudo variable 3</subject>");
    CHECK(load_error(wrap(bad)) == ErrorCode::UnboundTemplateVariable);
  }
  SUBCASE("duplicate id") {
    CHECK(load_error(wrap(kRule + kRule)) == ErrorCode::RuleParseError);
  }
  SUBCASE("one-sided reversed link") {
    std::string a = replaced(kRule, "id=\"7\"", "id=\"7\" reversed=\"8\"");
    std::string b = replaced(kRule, "id=\"7\"", "id=\"8\"");
    CHECK(load_error(wrap(a + b)) == ErrorCode::BadReversedLink);
    CHECK(load_error(wrap(a)) == ErrorCode::BadReversedLink);
    std::string b2 = replaced(kRule, "id=\"7\"", "id=\"8\" reversed=\"7\"");
    CHECK(parse_rules(wrap(a + b2)).size() == 2);
  }
  SUBCASE("bad ids") {
    CHECK(load_error(wrap(replaced(kRule, "id=\"7\"", "id=\"0\""))) == ErrorCode::RuleParseError);
    CHECK(load_error(wrap(replaced(kRule, "id=\"7\"", "id=\"x\""))) == ErrorCode::RuleParseError);
  }
  SUBCASE("markup errors name the rule") {
    std::string bad = replaced(kRule, "<mood>statement</mood>", "<mood>yelling</mood>");
    try {
      parse_rules(wrap(bad));
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RuleParseError);
      CHECK(std::string(e.what()).find("rule 7") != std::string::npos);
    }
  }
  SUBCASE("missing side") {
    std::string bad = kRule;
    auto from = bad.find("<entailment>");
    auto to = bad.find("</entailment>") + std::string("</entailment>").size();
    bad.erase(from, to - from);
    CHECK(load_error(wrap(bad)) == ErrorCode::RuleParseError);
  }
  SUBCASE("wrong root and broken XML") {
    CHECK_THROWS_AS(parse_rules("<rule/>"), Error);
    CHECK_THROWS_AS(parse_rules("<rules><rule id=\"1\">"), Error);
  }
  SUBCASE("missing file") {
    try {
      load_rules("/nonexistent/rules.xml");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IoError);
    }
  }
}

TEST_CASE("rules: validate") {
  const Taxonomy& tax = fixture().taxonomy;
  CHECK(validate(core_rule(2), &tax).empty());
  for (const auto& r : fixture().extended) {
    CAPTURE(r.id);
    CHECK(validate(r, &tax).empty());
  }
  CHECK(validate(fixture().extended.rules(), &tax).empty());

  Rule typo = parse_rule(replaced(kRule, "<category>person</category>",
                                  "<category>persom</category>"));
  CHECK(kinds(validate(typo, &tax)) == std::vector<FindingKind>{FindingKind::UnknownCategory});
  CHECK(validate(typo).empty());

  Rule vc = core_rule(2);
  vc.pattern.verb_phrase.verb_change = true;
  CHECK(kinds(validate(vc, &tax)) == std::vector<FindingKind>{FindingKind::VerbChangeInPattern});

  Rule cat = core_rule(2);
  cat.templ.subject.category = "person";
  CHECK(kinds(validate(cat, &tax)) == std::vector<FindingKind>{FindingKind::CategoryInTemplate});

  Rule unbound = core_rule(2);
  unbound.templ.subject = pseudo_phrase(9);
  CHECK(kinds(validate(unbound, &tax)) ==
        std::vector<FindingKind>{FindingKind::UnboundTemplateVariable});

  Rule complex = core_rule(2);
  complex.pattern.complexity = "compound";
  CHECK(kinds(validate(complex, &tax)) ==
        std::vector<FindingKind>{FindingKind::UnsupportedComplexity});

  Rule zero = core_rule(2);
  zero.id = 0;
  CHECK(kinds(validate(zero, &tax)) == std::vector<FindingKind>{FindingKind::InvalidId});
}

TEST_CASE("rules: validate over a list") {
  std::vector<Rule> rules = fixture().core.rules();
  rules.push_back(rules[0]);
  auto found = kinds(validate(rules, &fixture().taxonomy));
  CHECK(std::count(found.begin(), found.end(), FindingKind::DuplicateId) == 1);

  rules = fixture().core.rules();
  rules[4].reversed_id.reset();
  found = kinds(validate(rules, &fixture().taxonomy));
  CHECK(std::count(found.begin(), found.end(), FindingKind::BadReversedLink) >= 1);
  CHECK_THROWS_AS(RuleSet{rules}, Error);
}

TEST_CASE("rules: save and load round trip") {
  TempDir dir;
  for (const RuleSet* set : {&fixture().core, &fixture().extended}) {
    auto path = dir.path() / "rules.xml";
    save_rules(*set, path);
    CHECK_FALSE(std::filesystem::exists(dir.path() / "rules.xml.tmp"));
    RuleSet back = load_rules(path);
    CHECK(back == *set);
    CHECK(serialize_rules(back) == serialize_rules(*set));
  }
  Rule r = parse_rule(kRule);
  CHECK(parse_rule(serialize_rule(r)) == r);
  CHECK(parse_rule_list(wrap(kRule + kRule)).size() == 2);
}

TEST_CASE("rules: self test on the fixtures") {
  const auto& f = fixture();
  SelfTestReport core = self_test(f.core, f.taxonomy, f.lexicon);
  CHECK(core.example_count() >= 6);
  CHECK(core.all_passed());
  SelfTestReport ext = self_test(f.extended, f.taxonomy, f.lexicon);
  CHECK(ext.example_count() >= 20);
  CHECK(ext.all_passed());
  for (const auto& rep : ext.rules) {
    for (const auto& ex : rep.examples) {
      CAPTURE(ex.example.source);
      CHECK(ex.passed);
      CHECK(ex.error.empty());
    }
  }
}

TEST_CASE("rules: self test records failures without throwing") {
  const auto& f = fixture();
  Rule r = core_rule(1);
  r.examples = {{"What is the price of the book?", "How much is the pen?"},
                {"I study in Beijing University.", "How much is it?"},
                {"Read a book.", "Nothing."}};
  RuleTestReport rep;
  CHECK_NOTHROW(rep = self_test(r, f.taxonomy, f.lexicon));
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.examples.size() == 3);
  CHECK_FALSE(rep.examples[0].passed);
  CHECK(rep.examples[0].produced == std::vector<std::string>{"How much is the book?"});
  CHECK_FALSE(rep.examples[1].passed);
  CHECK(rep.examples[1].produced.empty());
  CHECK_FALSE(rep.examples[2].passed);
  CHECK(rep.examples[2].error.find("OutOfCoverage") != std::string::npos);

  r.examples = {{"What is the price of the book?", "How much is the book?"}};
  CHECK(self_test(r, f.taxonomy, f.lexicon).passed());
}

TEST_CASE("rules: finding names") {
  CHECK(to_string(FindingKind::UnknownCategory) == "UnknownCategory");
  CHECK(to_string(FindingKind::VerbChangeInPattern) == "VerbChangeInPattern");
}
