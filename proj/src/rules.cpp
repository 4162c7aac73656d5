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

#include "gte/rules.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gte/errors.hpp"
#include "gte/nlml.hpp"
#include "gte/taxonomy.hpp"
#include "gte/xml.hpp"

namespace gte {

namespace {

void collect_categories(const NounPhrase& np, std::vector<std::string>& out) {
  if (np.category) out.push_back(*np.category);
  for (const auto& p : np.premods) {
    if (p.possessor) collect_categories(*p.possessor, out);
  }
  for (const auto& pp : np.postmods) collect_categories(pp.object, out);
}

std::vector<std::string> categories_of(const SentenceModel& m) {
  std::vector<std::string> out;
  collect_categories(m.subject, out);
  const auto& vp = m.verb_phrase;
  if (vp.predicate && vp.predicate->type == PredicateType::Np) {
    collect_categories(vp.predicate->noun_phrase, out);
  }
  if (vp.direct_object) collect_categories(*vp.direct_object, out);
  for (const auto& c : m.circumstances) {
    if (c.kind == CircumKind::PrepPhrase) collect_categories(c.prep_phrase.object, out);
  }
  return out;
}

std::set<int> indices_of(const SentenceModel& m) {
  std::set<int> out;
  for (const auto& s : collect_pseudo_slots(m)) out.insert(s.index);
  return out;
}

int positive_int(const RawNode& node, std::string_view attr) {
  const std::string* v = node.attribute(attr);
  if (!v) {
    throw Error(ErrorCode::RuleParseError,
                "line " + std::to_string(node.line) + ": <rule> without " + std::string(attr));
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::RuleParseError, "line " + std::to_string(node.line) + ": " +
                                               std::string(attr) + "='" + *v +
                                               "' is not an integer");
  }
  if (n < 1) {
    throw Error(ErrorCode::RuleParseError, "line " + std::to_string(node.line) + ": " +
                                               std::string(attr) + " must be positive");
  }
  return n;
}

const RawNode& only_sentence(const RawNode& side, int id) {
  if (side.children.size() != 1 || side.children[0].tag != "sentence") {
    throw Error(ErrorCode::RuleParseError, "rule " + std::to_string(id) + ": <" + side.tag +
                                               "> must hold exactly one <sentence>");
  }
  return side.children[0];
}

Rule rule_from_raw(const RawNode& node) {
  if (node.tag != "rule") {
    throw Error(ErrorCode::RuleParseError,
                "line " + std::to_string(node.line) + ": expected <rule>, found <" + node.tag + ">");
  }
  Rule rule;
  rule.id = positive_int(node, "id");
  if (node.attribute("reversed")) rule.reversed_id = positive_int(node, "reversed");
  if (const auto* name = node.attribute("name")) rule.name = *name;

  const RawNode* pattern = node.child("pattern");
  const RawNode* entailment = node.child("entailment");
  if (!pattern || !entailment) {
    throw Error(ErrorCode::RuleParseError,
                "rule " + std::to_string(rule.id) + ": needs <pattern> and <entailment>");
  }
  try {
    rule.pattern = model_from_raw(only_sentence(*pattern, rule.id), Flavor::Pattern);
    rule.templ = model_from_raw(only_sentence(*entailment, rule.id), Flavor::Template);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RuleParseError) throw;
    throw Error(ErrorCode::RuleParseError, "rule " + std::to_string(rule.id) + ": " +
                                               std::string(e.code_name()) + ": " + e.what());
  }
  for (const auto& c : node.children) {
    if (c.tag == "pattern" || c.tag == "entailment") continue;
    if (c.tag != "example") {
      throw Error(ErrorCode::RuleParseError,
                  "rule " + std::to_string(rule.id) + ": unexpected <" + c.tag + ">");
    }
    const auto* src = c.attribute("source");
    const auto* expect = c.attribute("expect");
    if (!src || !expect) {
      throw Error(ErrorCode::RuleParseError,
                  "rule " + std::to_string(rule.id) + ": <example> needs source and expect");
    }
    rule.examples.push_back({*src, *expect});
  }
  return rule;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string indent_str(int n) { return std::string(static_cast<std::size_t>(n) * 2, ' '); }

}  // namespace

std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::UnboundTemplateVariable: return "UnboundTemplateVariable";
    case FindingKind::UnknownCategory: return "UnknownCategory";
    case FindingKind::VerbChangeInPattern: return "VerbChangeInPattern";
    case FindingKind::CategoryInTemplate: return "CategoryInTemplate";
    case FindingKind::UnsupportedComplexity: return "UnsupportedComplexity";
    case FindingKind::DuplicateId: return "DuplicateId";
    case FindingKind::BadReversedLink: return "BadReversedLink";
    case FindingKind::InvalidId: return "InvalidId";
  }
  return "?";
}

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (!index_.emplace(r.id, i).second) {
      throw Error(ErrorCode::RuleParseError, "rule " + std::to_string(r.id) + ": duplicate id");
    }
  }
  for (const Rule& r : rules_) {
    std::set<int> bound = indices_of(r.pattern);
    for (int idx : indices_of(r.templ)) {
      if (!bound.count(idx)) {
        throw Error(ErrorCode::UnboundTemplateVariable,
                    "rule " + std::to_string(r.id) + ": entailment uses pseudo variable " +
                        std::to_string(idx) + " which the pattern does not bind");
      }
    }
    if (r.reversed_id) {
      const Rule* other = find(*r.reversed_id);
      if (!other || other->reversed_id != r.id) {
        throw Error(ErrorCode::BadReversedLink,
                    "rule " + std::to_string(r.id) + ": reversed rule " +
                        std::to_string(*r.reversed_id) + " is missing or does not point back");
      }
    }
  }
}

const Rule* RuleSet::find(int id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

std::vector<Rule> parse_rule_list(std::string_view xml) {
  RawNode root = parse_xml(xml);
  if (root.tag != "rules") {
    throw Error(ErrorCode::RuleParseError, "rule file root must be <rules>");
  }
  std::vector<Rule> rules;
  for (const auto& c : root.children) rules.push_back(rule_from_raw(c));
  return rules;
}

std::vector<Rule> load_rule_list(const std::filesystem::path& path) {
  return parse_rule_list(read_file(path));
}

RuleSet parse_rules(std::string_view xml) { return RuleSet(parse_rule_list(xml)); }

RuleSet load_rules(const std::filesystem::path& path) { return parse_rules(read_file(path)); }

Rule parse_rule(std::string_view xml) { return rule_from_raw(parse_xml(xml)); }

std::string serialize_rule(const Rule& rule, int indent) {
  std::ostringstream out;
  const std::string pad = indent_str(indent);
  out << pad << "<rule id=\"" << rule.id << '"';
  if (rule.reversed_id) out << " reversed=\"" << *rule.reversed_id << '"';
  out << " name=\"" << xml_escape(rule.name) << "\">\n";
  out << pad << "  <pattern>\n" << serialize_nlml(rule.pattern, indent + 2);
  out << pad << "  </pattern>\n";
  out << pad << "  <entailment>\n" << serialize_nlml(rule.templ, indent + 2);
  out << pad << "  </entailment>\n";
  for (const auto& ex : rule.examples) {
    out << pad << "  <example source=\"" << xml_escape(ex.source) << "\" expect=\""
        << xml_escape(ex.expect) << "\"/>\n";
  }
  out << pad << "</rule>\n";
  return out.str();
}

std::string serialize_rules(const RuleSet& rules) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rules>\n";
  for (const auto& r : rules) out += serialize_rule(r, 1);
  out += "</rules>\n";
  return out;
}

void save_rules(const RuleSet& rules, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << serialize_rules(rules);
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot replace " + path.string());
  }
}

std::vector<Finding> validate(const Rule& rule, const Taxonomy* taxonomy) {
  std::vector<Finding> out;
  auto add = [&](FindingKind k, std::string msg) { out.push_back({k, rule.id, std::move(msg)}); };

  if (rule.id < 1) add(FindingKind::InvalidId, "rule id must be positive");
  std::set<int> bound = indices_of(rule.pattern);
  for (int idx : indices_of(rule.templ)) {
    if (!bound.count(idx)) {
      add(FindingKind::UnboundTemplateVariable,
          "entailment uses pseudo variable " + std::to_string(idx) + " not bound by the pattern");
    }
  }
  if (rule.pattern.verb_phrase.verb_change) {
    add(FindingKind::VerbChangeInPattern, "verb_change belongs on the entailment side");
  }
  if (has_category_constraint(rule.templ)) {
    add(FindingKind::CategoryInTemplate, "category constraints belong on the pattern side");
  }
  for (const SentenceModel* m : {&rule.pattern, &rule.templ}) {
    if (m->complexity != "simple") {
      add(FindingKind::UnsupportedComplexity, "complexity '" + m->complexity + "'");
    }
  }
  if (taxonomy) {
    for (const auto& cat : categories_of(rule.pattern)) {
      if (!taxonomy->contains(cat)) {
        add(FindingKind::UnknownCategory, "category '" + cat + "' is not in the taxonomy");
      }
    }
  }
  return out;
}

std::vector<Finding> validate(const std::vector<Rule>& rules, const Taxonomy* taxonomy) {
  std::vector<Finding> out;
  std::map<int, const Rule*> by_id;
  for (const auto& r : rules) {
    auto f = validate(r, taxonomy);
    out.insert(out.end(), f.begin(), f.end());
    if (!by_id.emplace(r.id, &r).second) {
      out.push_back({FindingKind::DuplicateId, r.id, "duplicate rule id"});
    }
  }
  for (const auto& r : rules) {
    if (!r.reversed_id) continue;
    auto it = by_id.find(*r.reversed_id);
    if (it == by_id.end() || it->second->reversed_id != r.id) {
      out.push_back({FindingKind::BadReversedLink, r.id,
                     "reversed rule " + std::to_string(*r.reversed_id) +
                         " is missing or does not point back"});
    }
  }
  return out;
}

bool RuleTestReport::passed() const {
  return std::all_of(examples.begin(), examples.end(), [](const auto& e) { return e.passed; });
}

std::size_t SelfTestReport::example_count() const {
  std::size_t n = 0;
  for (const auto& r : rules) n += r.examples.size();
  return n;
}

std::size_t SelfTestReport::passed_count() const {
  std::size_t n = 0;
  for (const auto& r : rules) {
    n += static_cast<std::size_t>(
        std::count_if(r.examples.begin(), r.examples.end(), [](const auto& e) { return e.passed; }));
  }
  return n;
}

}  // namespace gte
