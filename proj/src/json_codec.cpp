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

#include "gte/json_codec.hpp"

#include "gte/errors.hpp"
#include "gte/text_parser.hpp"

namespace gte {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedMarkup, what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key '") + key + "'");
  return *it;
}

std::string str(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) malformed(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

template <typename T, typename Parse>
T feature(const Json& j, const char* key, Parse parse) {
  std::string s = str(j, key);
  auto v = parse(s);
  if (!v) throw Error(ErrorCode::BadFeatureValue, std::string(key) + ": '" + s + "'");
  return *v;
}

template <typename T, typename Parse>
std::optional<T> optional_feature(const Json& j, const char* key, Parse parse) {
  if (!j.contains(key)) return std::nullopt;
  return feature<T>(j, key, parse);
}

const Json& array(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_array()) malformed(std::string("'") + key + "' must be an array");
  return v;
}

Json pseudo_json(const PseudoSlot& s) {
  return Json{{"index", s.index}, {"kind", to_string(s.kind)}};
}

PseudoSlot pseudo_from(const Json& j) {
  const Json& idx = require(j, "index");
  if (!idx.is_number_integer() || idx.get<int>() < 1) malformed("pseudo index must be a positive integer");
  return PseudoSlot{idx.get<int>(), feature<SlotKind>(j, "kind", parse_slot_kind)};
}

void np_fields(const NounPhrase& np, Json& j);
NounPhrase np_from_fields(const Json& j);

Json premod_json(const Premodifier& p) {
  Json j{{"type", to_string(p.kind)}};
  if (p.pseudo) {
    j["pseudo"] = pseudo_json(*p.pseudo);
  } else if (p.possessor) {
    j["possessor"] = to_json(*p.possessor);
  } else {
    j["word"] = p.word;
  }
  return j;
}

Premodifier premod_from(const Json& j) {
  Premodifier p;
  p.kind = feature<PremodKind>(j, "type", parse_premod_kind);
  if (j.contains("pseudo")) {
    p.pseudo = pseudo_from(j["pseudo"]);
  } else if (j.contains("possessor")) {
    p.possessor = noun_phrase_from_json(j["possessor"]);
  } else {
    p.word = str(j, "word");
  }
  return p;
}

Json prep_phrase_json(const PrepPhrase& pp) {
  Json j{{"prep", pp.preposition}};
  np_fields(pp.object, j);
  return j;
}

PrepPhrase prep_phrase_from(const Json& j) {
  PrepPhrase pp;
  pp.preposition = str(j, "prep");
  pp.object = np_from_fields(j);
  return pp;
}

void np_fields(const NounPhrase& np, Json& j) {
  if (np.pseudo) j["pseudo"] = pseudo_json(*np.pseudo);
  if (!np.premods.empty()) {
    Json prems = Json::array();
    for (const auto& p : np.premods) prems.push_back(premod_json(p));
    j["prem"] = std::move(prems);
  }
  if (np.head) {
    Json noun{{"type", to_string(np.head->type)}};
    if (np.head->person) noun["pers"] = to_string(*np.head->person);
    if (np.head->number) noun["numb"] = to_string(*np.head->number);
    noun["word"] = np.head->word;
    j["noun"] = std::move(noun);
  }
  if (np.category) j["category"] = *np.category;
  if (np.type_constraint) j["type"] = to_string(*np.type_constraint);
  if (!np.postmods.empty()) {
    Json pps = Json::array();
    for (const auto& pp : np.postmods) pps.push_back(prep_phrase_json(pp));
    j["prep_phrase"] = std::move(pps);
  }
}

NounPhrase np_from_fields(const Json& j) {
  if (!j.is_object()) malformed("noun phrase must be an object");
  NounPhrase np;
  if (j.contains("pseudo")) np.pseudo = pseudo_from(j["pseudo"]);
  if (j.contains("prem")) {
    for (const auto& p : array(j, "prem")) np.premods.push_back(premod_from(p));
  }
  if (j.contains("noun")) {
    const Json& n = j["noun"];
    Head h;
    h.type = feature<HeadType>(n, "type", parse_head_type);
    h.person = optional_feature<Person>(n, "pers", parse_person);
    h.number = optional_feature<Number>(n, "numb", parse_number);
    h.word = str(n, "word");
    np.head = std::move(h);
  }
  if (j.contains("category")) np.category = str(j, "category");
  np.type_constraint = optional_feature<HeadType>(j, "type", parse_head_type);
  if (j.contains("prep_phrase")) {
    for (const auto& pp : array(j, "prep_phrase")) np.postmods.push_back(prep_phrase_from(pp));
  }
  return np;
}

Json adjective_json(const QueryAdjective& a) {
  Json j = Json::object();
  if (!a.adverb.empty() || !a.adverb_type.empty()) {
    j["adv"] = Json{{"type", a.adverb_type}, {"word", a.adverb}};
  }
  j["word"] = a.adjective;
  j["grad"] = to_string(a.grad);
  return j;
}

QueryAdjective adjective_from(const Json& j) {
  QueryAdjective a;
  if (j.contains("adv")) {
    a.adverb_type = str(j["adv"], "type");
    a.adverb = str(j["adv"], "word");
  }
  a.adjective = str(j, "word");
  a.grad = feature<Grad>(j, "grad", parse_grad);
  return a;
}

Json verb_phrase_json(const VerbPhrase& vp) {
  Json j = Json::object();
  if (vp.verb_change) j["verb_change"] = true;
  j["verb_type"] = to_string(vp.verb_type);
  j["voice"] = to_string(vp.voice);
  if (vp.tense) j["tense"] = to_string(*vp.tense);
  if (vp.person) j["pers"] = to_string(*vp.person);
  if (vp.number) j["numb"] = to_string(*vp.number);
  j["verb_word"] = vp.verb_words;
  if (vp.kernel_infinitive) j["kernel_tense"] = "infi";
  if (vp.predicate) {
    Json p{{"predicate_type", to_string(vp.predicate->type)}};
    if (vp.predicate->type == PredicateType::Np) {
      np_fields(vp.predicate->noun_phrase, p);
    } else {
      p["adj"] = adjective_json(vp.predicate->adjective);
    }
    j["predicate"] = std::move(p);
  }
  if (vp.direct_object) j["direct_object"] = to_json(*vp.direct_object);
  return j;
}

VerbPhrase verb_phrase_from(const Json& j) {
  VerbPhrase vp;
  if (j.contains("verb_change")) {
    if (!j["verb_change"].is_boolean()) malformed("'verb_change' must be a boolean");
    vp.verb_change = j["verb_change"].get<bool>();
  }
  vp.verb_type = feature<VerbType>(j, "verb_type", parse_verb_type);
  vp.voice = feature<Voice>(j, "voice", parse_voice);
  vp.tense = optional_feature<Tense>(j, "tense", parse_tense);
  vp.person = optional_feature<Person>(j, "pers", parse_person);
  vp.number = optional_feature<Number>(j, "numb", parse_number);
  for (const auto& w : array(j, "verb_word")) {
    if (!w.is_string()) malformed("'verb_word' entries must be strings");
    vp.verb_words.push_back(w.get<std::string>());
  }
  if (j.contains("kernel_tense")) {
    if (str(j, "kernel_tense") != "infi") {
      throw Error(ErrorCode::BadFeatureValue, "kernel_tense: '" + str(j, "kernel_tense") + "'");
    }
    vp.kernel_infinitive = true;
  }
  if (j.contains("predicate")) {
    const Json& p = j["predicate"];
    Predicate pred;
    pred.type = feature<PredicateType>(p, "predicate_type", parse_predicate_type);
    if (pred.type == PredicateType::Np) {
      pred.noun_phrase = np_from_fields(p);
    } else {
      pred.adjective = adjective_from(require(p, "adj"));
    }
    vp.predicate = std::move(pred);
  }
  if (j.contains("direct_object")) vp.direct_object = noun_phrase_from_json(j["direct_object"]);
  return vp;
}

Json circumstance_json(const Circumstance& c) {
  Json j{{"circum_type", to_string(c.kind)}};
  if (c.kind == CircumKind::PrepPhrase) {
    j["prep_phrase"] = prep_phrase_json(c.prep_phrase);
  } else {
    j["word"] = c.tokens;
  }
  return j;
}

Circumstance circumstance_from(const Json& j) {
  Circumstance c;
  c.kind = feature<CircumKind>(j, "circum_type", parse_circum_kind);
  if (c.kind == CircumKind::PrepPhrase) {
    c.prep_phrase = prep_phrase_from(require(j, "prep_phrase"));
  } else {
    for (const auto& w : array(j, "word")) {
      if (!w.is_string()) malformed("circumstance words must be strings");
      c.tokens.push_back(w.get<std::string>());
    }
  }
  return c;
}

}  // namespace

Json to_json(const NounPhrase& np) {
  Json j = Json::object();
  np_fields(np, j);
  return j;
}

NounPhrase noun_phrase_from_json(const Json& j) { return np_from_fields(j); }

Json to_json(const SentenceModel& m) {
  Json j{{"flavor", to_string(m.flavor)},
         {"mood", to_string(m.mood)},
         {"complexity", m.complexity},
         {"subject", to_json(m.subject)},
         {"verb_phrase", verb_phrase_json(m.verb_phrase)}};
  Json circ = Json::array();
  for (const auto& c : m.circumstances) circ.push_back(circumstance_json(c));
  j["circum"] = std::move(circ);
  return j;
}

SentenceModel sentence_from_json(const Json& j) {
  SentenceModel m;
  m.flavor = feature<Flavor>(j, "flavor", parse_flavor);
  m.mood = feature<Mood>(j, "mood", parse_mood);
  m.complexity = str(j, "complexity");
  m.subject = noun_phrase_from_json(require(j, "subject"));
  m.verb_phrase = verb_phrase_from(require(j, "verb_phrase"));
  if (j.contains("circum")) {
    for (const auto& c : array(j, "circum")) m.circumstances.push_back(circumstance_from(c));
  }
  return m;
}

Json to_json(const Fragment& f) {
  Json j{{"kind", to_string(f.kind)}};
  switch (f.kind) {
    case SlotKind::NounPhrase:
      j["text"] = realize_phrase(f.phrase);
      j["phrase"] = to_json(f.phrase);
      break;
    case SlotKind::Word:
      j["text"] = f.word;
      break;
    case SlotKind::Possessive:
      j["text"] = f.possessive.possessor ? realize_phrase(*f.possessive.possessor) + "'s"
                                         : f.possessive.word;
      j["prem"] = premod_json(f.possessive);
      break;
  }
  return j;
}

Json to_json(const Binding& b) {
  Json j = Json::object();
  for (const auto& [idx, f] : b) j[std::to_string(idx)] = to_json(f);
  return j;
}

Json to_json(const Rule& r) {
  Json j{{"id", r.id}};
  if (r.reversed_id) j["reversed"] = *r.reversed_id;
  j["name"] = r.name;
  j["pattern"] = to_json(r.pattern);
  j["entailment"] = to_json(r.templ);
  Json ex = Json::array();
  for (const auto& e : r.examples) ex.push_back(Json{{"source", e.source}, {"expect", e.expect}});
  j["examples"] = std::move(ex);
  return j;
}

Rule rule_from_json(const Json& j) {
  Rule r;
  const Json& id = require(j, "id");
  if (!id.is_number_integer()) malformed("'id' must be an integer");
  r.id = id.get<int>();
  if (j.contains("reversed") && !j["reversed"].is_null()) {
    if (!j["reversed"].is_number_integer()) malformed("'reversed' must be an integer");
    r.reversed_id = j["reversed"].get<int>();
  }
  if (j.contains("name")) r.name = str(j, "name");
  r.pattern = sentence_from_json(require(j, "pattern"));
  r.templ = sentence_from_json(require(j, "entailment"));
  if (r.pattern.flavor != Flavor::Pattern || r.templ.flavor != Flavor::Template) {
    throw Error(ErrorCode::ConflictingFlavor,
                "rule sides must have flavor pattern and template respectively");
  }
  if (j.contains("examples")) {
    for (const auto& e : array(j, "examples")) r.examples.push_back({str(e, "source"), str(e, "expect")});
  }
  return r;
}

Json to_json(const Finding& f) {
  return Json{{"kind", to_string(f.kind)}, {"ruleId", f.rule_id}, {"message", f.message}};
}

Json to_json(const DerivationStep& s) {
  if (s.rule_id) return Json(*s.rule_id);
  return Json(s.to_string());
}

Json to_json(const EntailmentResult& r) {
  Json deriv = Json::array();
  for (const auto& s : r.derivation) deriv.push_back(to_json(s));
  return Json{{"text", r.text}, {"derivation", std::move(deriv)}, {"depth", r.depth},
              {"model", to_json(r.model)}};
}

Json to_json(const MatchTrace& t) {
  Json compared = Json::array();
  for (auto s : t.compared) compared.push_back(to_string(s));
  Json j{{"compared", std::move(compared)}};
  j["failedAt"] = t.failed_at ? Json(to_string(*t.failed_at)) : Json(nullptr);
  return j;
}

}  // namespace gte
