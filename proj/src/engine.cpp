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

#include "gte/engine.hpp"

#include <set>
#include <stdexcept>

#include "gte/errors.hpp"
#include "gte/nlml.hpp"
#include "gte/text_parser.hpp"
#include "gte/transformer.hpp"

namespace gte {

namespace {

std::vector<RuleEntailment> apply_all(const SentenceModel& sentence, const RuleSet& rules,
                                      const Taxonomy& taxonomy, const Lexicon& lexicon) {
  std::vector<RuleEntailment> out;
  for (const Rule& rule : rules) {
    try {
      if (auto m = apply_rule(rule, sentence, taxonomy, lexicon)) {
        out.push_back({rule.id, std::move(*m)});
      }
    } catch (const Error& e) {
      throw Error(e.code(), "rule " + std::to_string(rule.id) + ": " + e.what());
    }
  }
  return out;
}

NounPhrase* complement_of(SentenceModel& m) {
  VerbPhrase& vp = m.verb_phrase;
  if (vp.verb_type == VerbType::Be && vp.predicate && vp.predicate->type == PredicateType::Np) {
    return &vp.predicate->noun_phrase;
  }
  if (vp.verb_type == VerbType::VerbObject && vp.direct_object) return &*vp.direct_object;
  return nullptr;
}

bool hyponym_target(const NounPhrase& np) {
  return !np.pseudo && np.head && np.head->type == HeadType::Noun && np.premods.size() == 1 &&
         np.premods[0].kind == PremodKind::Article && !np.premods[0].pseudo;
}

void require_simple(const SentenceModel& m) {
  if (m.complexity != "simple") {
    throw Error(ErrorCode::NotSupported, "complexity '" + m.complexity + "' is not supported");
  }
}

}  // namespace

std::string_view to_string(LogicalMode mode) {
  switch (mode) {
    case LogicalMode::Always: return "always";
    case LogicalMode::Fallback: return "fallback";
    case LogicalMode::Off: return "off";
  }
  return "?";
}

std::optional<LogicalMode> parse_logical_mode(std::string_view s) {
  if (s == "always") return LogicalMode::Always;
  if (s == "fallback") return LogicalMode::Fallback;
  if (s == "off") return LogicalMode::Off;
  return std::nullopt;
}

std::string DerivationStep::to_string() const {
  if (rule_id) return std::to_string(*rule_id);
  return "hyponym:" + word + "→" + parent;
}

std::vector<RuleEntailment> entail_once(const SentenceModel& sentence, const RuleSet& rules,
                                        const Taxonomy& taxonomy, const Lexicon& lexicon) {
  std::vector<RuleEntailment> out;
  std::set<std::string> seen;
  for (auto& r : apply_all(sentence, rules, taxonomy, lexicon)) {
    if (seen.insert(serialize_nlml(r.model)).second) out.push_back(std::move(r));
  }
  return out;
}

std::vector<HyponymEntailment> logical_entail(const SentenceModel& sentence,
                                              const Taxonomy& taxonomy, const Lexicon& lexicon) {
  std::vector<HyponymEntailment> out;
  if (sentence.mood != Mood::Statement) return out;
  SentenceModel probe = sentence;
  const NounPhrase* target = complement_of(probe);
  if (!target || !hyponym_target(*target)) return out;

  const std::string lemma = lexicon.noun_lemma(target->head->word);
  const bool plural = target->head->number == Number::Plur;
  for (const std::string& parent : taxonomy.hypernyms(lemma)) {
    SentenceModel m = sentence;
    NounPhrase& np = *complement_of(m);
    np.head->word = plural ? lexicon.plural_of(parent) : parent;
    std::string& article = np.premods[0].word;
    if (to_lower(article) == "a" || to_lower(article) == "an") {
      article = std::string(indefinite_article(np.head->word));
    }
    normalize_instance(m, lexicon);
    out.push_back({lemma, parent, std::move(m)});
  }
  return out;
}

std::vector<EntailmentResult> entail_closure(const SentenceModel& sentence, const RuleSet& rules,
                                             const Taxonomy& taxonomy, const Lexicon& lexicon,
                                             const ClosureOptions& options) {
  require_simple(sentence);
  if (options.max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  struct Item {
    SentenceModel model;
    std::vector<DerivationStep> derivation;
  };

  std::vector<EntailmentResult> results;
  std::set<std::string> seen{serialize_nlml(sentence)};
  std::vector<Item> frontier{{sentence, {}}};

  for (int depth = 1; depth <= options.max_depth && !frontier.empty(); ++depth) {
    std::vector<Item> next;
    auto add = [&](SentenceModel model, const Item& from, DerivationStep step) {
      if (!seen.insert(serialize_nlml(model)).second) return;
      Item item{std::move(model), from.derivation};
      item.derivation.push_back(std::move(step));
      results.push_back({realize(item.model, lexicon), item.model, item.derivation, depth});
      next.push_back(std::move(item));
    };

    for (const Item& item : frontier) {
      const Rule* last = nullptr;
      if (!item.derivation.empty() && item.derivation.back().is_rule()) {
        last = rules.find(*item.derivation.back().rule_id);
      }
      auto matches = apply_all(item.model, rules, taxonomy, lexicon);
      for (auto& r : matches) {
        const bool reverses_last =
            last && (last->reversed_id == r.rule_id ||
                     rules.find(r.rule_id)->reversed_id == last->id);
        if (reverses_last) continue;
        add(std::move(r.model), item, DerivationStep::rule(r.rule_id));
      }
      const bool logical = options.mode == LogicalMode::Always ||
                           (options.mode == LogicalMode::Fallback && matches.empty());
      if (logical) {
        for (auto& h : logical_entail(item.model, taxonomy, lexicon)) {
          add(std::move(h.model), item, DerivationStep::hyponym(h.word, h.parent));
        }
      }
    }
    frontier = std::move(next);
  }
  return results;
}

std::vector<EntailmentResult> entail_closure(std::string_view text, const RuleSet& rules,
                                             const Taxonomy& taxonomy, const Lexicon& lexicon,
                                             const ClosureOptions& options) {
  return entail_closure(parse_text(text, lexicon), rules, taxonomy, lexicon, options);
}

KnowledgeBase KnowledgeBase::load(const Paths& paths) {
  std::optional<std::filesystem::path> verbs = paths.verbs;
  if (!verbs) {
    auto sibling = paths.lexicon.parent_path() / "verbs.tsv";
    if (std::filesystem::exists(sibling)) verbs = sibling;
  }
  KnowledgeBase kb;
  kb.lexicon = Lexicon::load(paths.lexicon, verbs);
  kb.taxonomy = Taxonomy::load(paths.taxonomy);
  kb.rules = load_rules(paths.rules);
  return kb;
}

}  // namespace gte
