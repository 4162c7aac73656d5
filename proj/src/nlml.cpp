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

#include "gte/nlml.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <sstream>

#include "gte/errors.hpp"

namespace gte {

namespace {

constexpr std::array<std::string_view, 29> kTagInventory{
    "sentence",  "mood",      "complexity", "subject",     "verb_phrase", "verb_type",
    "voice",     "tense",     "numb",       "pers",        "verb_word",   "kernel_tense",
    "verb_change", "predicate", "predicate_type", "direct_object", "adj", "adv",
    "grad",      "noun",      "type",       "word",        "category",    "prem",
    "prep_phrase", "prep",    "circum",     "circum_type", "pseudo"};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void malformed(const RawNode& at, const std::string& what) {
  throw Error(ErrorCode::MalformedMarkup, "line " + std::to_string(at.line) + ": " + what);
}

[[noreturn]] void bad_value(const RawNode& at, const std::string& value) {
  throw Error(ErrorCode::BadFeatureValue, "line " + std::to_string(at.line) + ": <" + at.tag +
                                              "> does not accept '" + value + "'");
}

void check_inventory(const RawNode& node) {
  if (std::find(kTagInventory.begin(), kTagInventory.end(), node.tag) == kTagInventory.end()) {
    throw Error(ErrorCode::UnknownTag,
                "line " + std::to_string(node.line) + ": unknown tag <" + node.tag + ">");
  }
  for (const auto& c : node.children) check_inventory(c);
}

std::optional<int> pseudo_text_index(std::string_view text) {
  static const std::regex re(R"(^\s*pseudo\s+variable\s+(\d+)\s*$)", std::regex::icase);
  std::cmatch m;
  std::string s(text);
  if (!std::regex_match(s.c_str(), m, re)) return std::nullopt;
  return std::stoi(m[1].str());
}

template <typename T, typename F>
T feature(const RawNode& node, F parse) {
  std::string v = trim(node.text);
  if (!node.children.empty()) malformed(node, "<" + node.tag + "> must hold text");
  auto parsed = parse(v);
  if (!parsed) bad_value(node, v);
  return *parsed;
}

class ModelReader {
 public:
  bool saw_pseudo = false;
  bool saw_category = false;
  bool saw_verb_change = false;

  SentenceModel sentence(const RawNode& root) {
    if (root.tag != "sentence") malformed(root, "root element must be <sentence>");
    check_inventory(root);
    SentenceModel model;
    bool have_mood = false;
    bool have_subject = false;
    bool have_vp = false;
    for (const auto& c : root.children) {
      if (c.tag == "mood") {
        model.mood = feature<Mood>(c, parse_mood);
        have_mood = true;
      } else if (c.tag == "complexity") {
        model.complexity = trim(c.text);
        if (model.complexity.empty()) bad_value(c, "");
      } else if (c.tag == "subject") {
        model.subject = phrase_slot(c);
        have_subject = true;
      } else if (c.tag == "verb_phrase") {
        model.verb_phrase = verb_phrase(c);
        have_vp = true;
      } else if (c.tag == "circum") {
        model.circumstances.push_back(circumstance(c));
      } else {
        malformed(c, "unexpected <" + c.tag + "> in <sentence>");
      }
    }
    if (!have_mood) {
      throw Error(ErrorCode::MissingMood, "line " + std::to_string(root.line) + ": no <mood>");
    }
    if (!have_subject) malformed(root, "missing <subject>");
    if (!have_vp) malformed(root, "missing <verb_phrase>");
    return model;
  }

 private:
  PseudoSlot slot_from_element(const RawNode& p, SlotKind position_kind) {
    saw_pseudo = true;
    PseudoSlot slot{1, position_kind};
    if (const auto* idx = p.attribute("index")) {
      try {
        slot.index = std::stoi(*idx);
      } catch (const std::exception&) {
        bad_value(p, *idx);
      }
    } else if (auto n = pseudo_text_index(p.text)) {
      slot.index = *n;
    } else {
      malformed(p, "<pseudo> needs an index attribute or 'pseudo variable N' text");
    }
    if (slot.index < 1) bad_value(p, std::to_string(slot.index));
    if (const auto* kind = p.attribute("kind")) {
      auto k = parse_slot_kind(*kind);
      if (!k) bad_value(p, *kind);
      slot.kind = *k;
    }
    return slot;
  }

  // Element whose content is a noun phrase or a bare "pseudo variable N".
  NounPhrase phrase_slot(const RawNode& node) {
    if (node.children.empty()) {
      std::string t = trim(node.text);
      if (t.empty()) return {};
      if (auto n = pseudo_text_index(t)) {
        saw_pseudo = true;
        return pseudo_phrase(*n);
      }
      malformed(node, "<" + node.tag + "> text must be a pseudo variable");
    }
    std::vector<const RawNode*> parts;
    for (const auto& c : node.children) parts.push_back(&c);
    return noun_phrase(parts, node);
  }

  NounPhrase noun_phrase(const std::vector<const RawNode*>& parts, const RawNode& owner) {
    NounPhrase np;
    std::optional<PseudoSlot> whole;
    std::optional<std::string> category;
    std::optional<HeadType> type_constraint;
    for (const RawNode* c : parts) {
      if (c->tag == "pseudo") {
        whole = slot_from_element(*c, SlotKind::NounPhrase);
        if (whole->kind != SlotKind::NounPhrase) bad_value(*c, std::string(to_string(whole->kind)));
      } else if (c->tag == "prem") {
        np.premods.push_back(premodifier(*c));
      } else if (c->tag == "noun") {
        noun(*c, np, whole, category, type_constraint);
      } else if (c->tag == "category") {
        category = trim(c->text);
        saw_category = true;
      } else if (c->tag == "type") {
        type_constraint = feature<HeadType>(*c, parse_head_type);
      } else if (c->tag == "prep_phrase") {
        np.postmods.push_back(prep_phrase(*c));
      } else {
        malformed(*c, "unexpected <" + c->tag + "> in noun phrase of <" + owner.tag + ">");
      }
    }
    if (whole) {
      NounPhrase p;
      p.pseudo = whole;
      p.category = category;
      // A pseudo noun phrase only keeps a restrictive head type; "noun" is
      // the unconstrained default.
      if (type_constraint && *type_constraint != HeadType::Noun) p.type_constraint = type_constraint;
      return p;
    }
    np.category = category;
    return np;
  }

  void noun(const RawNode& n, NounPhrase& np, std::optional<PseudoSlot>& whole,
            std::optional<std::string>& category, std::optional<HeadType>& type_constraint) {
    if (n.children.empty()) {
      std::string t = trim(n.text);
      if (auto idx = pseudo_text_index(t)) {
        saw_pseudo = true;
        whole = PseudoSlot{*idx, SlotKind::NounPhrase};
        return;
      }
      if (t.empty()) malformed(n, "empty <noun>");
      np.head = Head{t, HeadType::Noun, std::nullopt, std::nullopt};
      return;
    }
    Head head;
    bool have_word = false;
    for (const auto& c : n.children) {
      if (c.tag == "word") {
        std::string w = trim(c.text);
        if (auto idx = pseudo_text_index(w)) {
          saw_pseudo = true;
          whole = PseudoSlot{*idx, SlotKind::NounPhrase};
        } else {
          head.word = w;
        }
        have_word = true;
      } else if (c.tag == "type") {
        head.type = feature<HeadType>(c, parse_head_type);
        type_constraint = head.type;
      } else if (c.tag == "pers") {
        head.person = feature<Person>(c, parse_person);
      } else if (c.tag == "numb") {
        head.number = feature<Number>(c, parse_number);
      } else if (c.tag == "category") {
        category = trim(c.text);
        saw_category = true;
      } else if (c.tag == "pseudo") {
        whole = slot_from_element(c, SlotKind::NounPhrase);
        have_word = true;
      } else {
        malformed(c, "unexpected <" + c.tag + "> in <noun>");
      }
    }
    if (!have_word) malformed(n, "<noun> without <word>");
    if (!whole) {
      np.head = head;
      type_constraint.reset();
    }
  }

  Premodifier premodifier(const RawNode& p) {
    Premodifier pre;
    if (p.children.empty()) malformed(p, "<prem> needs <type> and content");
    const RawNode* type = p.child("type");
    if (!type) malformed(p, "<prem> without <type>");
    pre.kind = feature<PremodKind>(*type, parse_premod_kind);
    std::vector<const RawNode*> rest;
    for (const auto& c : p.children) {
      if (&c == type || c.tag == "pers" || c.tag == "numb") {
        if (c.tag == "pers") feature<Person>(c, parse_person);
        if (c.tag == "numb") feature<Number>(c, parse_number);
        continue;
      }
      rest.push_back(&c);
    }
    if (rest.empty()) malformed(p, "<prem> without content");

    const SlotKind word_slot =
        pre.kind == PremodKind::Possessive ? SlotKind::Possessive : SlotKind::Word;
    if (rest.size() == 1 && rest[0]->tag == "word") {
      std::string w = trim(rest[0]->text);
      if (auto idx = pseudo_text_index(w)) {
        saw_pseudo = true;
        pre.pseudo = PseudoSlot{*idx, word_slot};
      } else {
        if (w.empty()) malformed(*rest[0], "empty <word>");
        pre.word = w;
      }
      return pre;
    }
    if (rest.size() == 1 && rest[0]->tag == "pseudo") {
      PseudoSlot slot = slot_from_element(*rest[0], word_slot);
      if (slot.kind != SlotKind::NounPhrase) {
        pre.pseudo = slot;
        return pre;
      }
    }
    if (pre.kind != PremodKind::Possessive) {
      malformed(p, "only possessive premodifiers may hold a noun phrase");
    }
    pre.possessor = noun_phrase(rest, p);
    return pre;
  }

  PrepPhrase prep_phrase(const RawNode& node) {
    PrepPhrase pp;
    std::vector<const RawNode*> rest;
    bool have_prep = false;
    for (const auto& c : node.children) {
      if (c.tag == "prep") {
        pp.preposition = trim(c.text);
        have_prep = true;
      } else {
        rest.push_back(&c);
      }
    }
    if (!have_prep || pp.preposition.empty()) malformed(node, "<prep_phrase> without <prep>");
    pp.object = noun_phrase(rest, node);
    return pp;
  }

  QueryAdjective adjective(const RawNode& a) {
    QueryAdjective q;
    for (const auto& c : a.children) {
      if (c.tag == "adv") {
        for (const auto& d : c.children) {
          if (d.tag == "type") q.adverb_type = trim(d.text);
          else if (d.tag == "word") q.adverb = trim(d.text);
          else malformed(d, "unexpected <" + d.tag + "> in <adv>");
        }
      } else if (c.tag == "word") {
        q.adjective = trim(c.text);
      } else if (c.tag == "grad") {
        q.grad = feature<Grad>(c, parse_grad);
      } else {
        malformed(c, "unexpected <" + c.tag + "> in <adj>");
      }
    }
    if (q.adjective.empty()) malformed(a, "<adj> without <word>");
    return q;
  }

  Predicate predicate(const RawNode& node) {
    Predicate pred;
    const RawNode* type = node.child("predicate_type");
    if (!type) malformed(node, "<predicate> without <predicate_type>");
    pred.type = feature<PredicateType>(*type, parse_predicate_type);
    std::vector<const RawNode*> rest;
    for (const auto& c : node.children) {
      if (&c != type) rest.push_back(&c);
    }
    if (pred.type == PredicateType::Np) {
      pred.noun_phrase = noun_phrase(rest, node);
    } else {
      if (rest.size() != 1 || rest[0]->tag != "adj") {
        malformed(node, "adjective predicate needs exactly one <adj>");
      }
      pred.adjective = adjective(*rest[0]);
    }
    return pred;
  }

  VerbPhrase verb_phrase(const RawNode& node) {
    VerbPhrase vp;
    bool have_type = false;
    for (const auto& c : node.children) {
      if (c.tag == "verb_change") {
        vp.verb_change = true;
        saw_verb_change = true;
      } else if (c.tag == "verb_type") {
        vp.verb_type = feature<VerbType>(c, parse_verb_type);
        have_type = true;
      } else if (c.tag == "voice") {
        vp.voice = feature<Voice>(c, parse_voice);
      } else if (c.tag == "tense") {
        vp.tense = feature<Tense>(c, parse_tense);
      } else if (c.tag == "pers") {
        vp.person = feature<Person>(c, parse_person);
      } else if (c.tag == "numb") {
        vp.number = feature<Number>(c, parse_number);
      } else if (c.tag == "verb_word") {
        std::string w = trim(c.text);
        if (w.empty()) malformed(c, "empty <verb_word>");
        if (pseudo_text_index(w)) malformed(c, "pseudo variables are not allowed in <verb_word>");
        vp.verb_words.push_back(w);
      } else if (c.tag == "kernel_tense") {
        std::string v = trim(c.text);
        if (v != "infi") bad_value(c, v);
        vp.kernel_infinitive = true;
      } else if (c.tag == "predicate") {
        vp.predicate = predicate(c);
      } else if (c.tag == "direct_object") {
        vp.direct_object = phrase_slot(c);
      } else {
        malformed(c, "unexpected <" + c.tag + "> in <verb_phrase>");
      }
    }
    if (!have_type) malformed(node, "<verb_phrase> without <verb_type>");
    if (vp.verb_type == VerbType::Be && !vp.predicate) {
      malformed(node, "copula verb phrase without <predicate>");
    }
    if (vp.verb_type == VerbType::VerbObject && !vp.direct_object) {
      malformed(node, "verb_object verb phrase without <direct_object>");
    }
    return vp;
  }

  Circumstance circumstance(const RawNode& node) {
    Circumstance c;
    const RawNode* type = node.child("circum_type");
    if (!type) malformed(node, "<circum> without <circum_type>");
    c.kind = feature<CircumKind>(*type, parse_circum_kind);
    if (c.kind == CircumKind::PrepPhrase) {
      const RawNode* pp = node.child("prep_phrase");
      if (!pp) malformed(node, "prep_phrase circumstance without <prep_phrase>");
      c.prep_phrase = prep_phrase(*pp);
    } else {
      for (const auto& w : node.children) {
        if (&w == type) continue;
        if (w.tag != "word") malformed(w, "adverbial circumstances hold <word> elements only");
        c.tokens.push_back(trim(w.text));
      }
      if (c.tokens.empty()) malformed(node, "empty adverbial circumstance");
    }
    return c;
  }
};

// ---------------------------------------------------------------------------
// writer

class Writer {
 public:
  explicit Writer(int indent) : depth_(indent) {}

  std::string str() const { return out_.str(); }

  void leaf(std::string_view tag, std::string_view text) {
    pad();
    out_ << '<' << tag << '>' << xml_escape(text) << "</" << tag << ">\n";
  }
  void empty(std::string_view tag) {
    pad();
    out_ << '<' << tag << "/>\n";
  }
  void open(std::string_view tag, std::string_view attrs = {}) {
    pad();
    out_ << '<' << tag << attrs << ">\n";
    ++depth_;
  }
  void close(std::string_view tag) {
    --depth_;
    pad();
    out_ << "</" << tag << ">\n";
  }

  void pseudo(const PseudoSlot& s) {
    pad();
    out_ << "<pseudo index=\"" << s.index << "\" kind=\"" << to_string(s.kind) << "\"/>\n";
  }

  void noun_phrase_content(const NounPhrase& np) {
    if (np.pseudo) {
      pseudo(*np.pseudo);
      if (np.category) leaf("category", *np.category);
      if (np.type_constraint) leaf("type", to_string(*np.type_constraint));
      return;
    }
    for (const auto& p : np.premods) premodifier(p);
    if (np.head) {
      open("noun");
      leaf("type", to_string(np.head->type));
      if (np.head->person) leaf("pers", to_string(*np.head->person));
      if (np.head->number) leaf("numb", to_string(*np.head->number));
      leaf("word", np.head->word);
      close("noun");
    }
    if (np.category) leaf("category", *np.category);
    for (const auto& pp : np.postmods) prep_phrase(pp);
  }

  void phrase_element(std::string_view tag, const NounPhrase& np) {
    if (np == NounPhrase{}) {
      empty(tag);
      return;
    }
    open(tag);
    noun_phrase_content(np);
    close(tag);
  }

  void premodifier(const Premodifier& p) {
    open("prem");
    leaf("type", to_string(p.kind));
    if (p.pseudo) {
      pseudo(*p.pseudo);
    } else if (p.possessor) {
      noun_phrase_content(*p.possessor);
    } else {
      leaf("word", p.word);
    }
    close("prem");
  }

  void prep_phrase(const PrepPhrase& pp) {
    open("prep_phrase");
    leaf("prep", pp.preposition);
    noun_phrase_content(pp.object);
    close("prep_phrase");
  }

  void verb_phrase(const VerbPhrase& vp) {
    open("verb_phrase");
    if (vp.verb_change) empty("verb_change");
    leaf("verb_type", to_string(vp.verb_type));
    leaf("voice", to_string(vp.voice));
    if (vp.tense) leaf("tense", to_string(*vp.tense));
    if (vp.person) leaf("pers", to_string(*vp.person));
    if (vp.number) leaf("numb", to_string(*vp.number));
    for (const auto& w : vp.verb_words) leaf("verb_word", w);
    if (vp.kernel_infinitive) leaf("kernel_tense", "infi");
    if (vp.predicate) {
      const auto& pred = *vp.predicate;
      open("predicate");
      leaf("predicate_type", to_string(pred.type));
      if (pred.type == PredicateType::Np) {
        noun_phrase_content(pred.noun_phrase);
      } else {
        open("adj");
        if (!pred.adjective.adverb.empty() || !pred.adjective.adverb_type.empty()) {
          open("adv");
          if (!pred.adjective.adverb_type.empty()) leaf("type", pred.adjective.adverb_type);
          leaf("word", pred.adjective.adverb);
          close("adv");
        }
        leaf("word", pred.adjective.adjective);
        leaf("grad", to_string(pred.adjective.grad));
        close("adj");
      }
      close("predicate");
    }
    if (vp.direct_object) phrase_element("direct_object", *vp.direct_object);
    close("verb_phrase");
  }

  void circumstance(const Circumstance& c) {
    open("circum");
    leaf("circum_type", to_string(c.kind));
    if (c.kind == CircumKind::PrepPhrase) {
      prep_phrase(c.prep_phrase);
    } else {
      for (const auto& t : c.tokens) leaf("word", t);
    }
    close("circum");
  }

 private:
  void pad() {
    for (int i = 0; i < depth_; ++i) out_ << "  ";
  }

  std::ostringstream out_;
  int depth_;
};

}  // namespace

SentenceModel model_from_raw(const RawNode& root, std::optional<Flavor> flavor) {
  ModelReader reader;
  SentenceModel model = reader.sentence(root);
  const bool pattern_markers = reader.saw_pseudo || reader.saw_category;

  if (!flavor) {
    if (const auto* attr = root.attribute("flavor")) {
      auto f = parse_flavor(*attr);
      if (!f) bad_value(root, *attr);
      flavor = f;
    }
  }
  if (flavor) {
    if (*flavor == Flavor::Instance && (pattern_markers || reader.saw_verb_change)) {
      throw Error(ErrorCode::ConflictingFlavor,
                  "instance sentence contains pseudo variables, categories or verb_change");
    }
    model.flavor = *flavor;
    return model;
  }
  if (pattern_markers && reader.saw_verb_change) {
    throw Error(ErrorCode::ConflictingFlavor,
                "both pseudo/category and verb_change markers present without rule context");
  }
  model.flavor = reader.saw_verb_change ? Flavor::Template
                 : pattern_markers      ? Flavor::Pattern
                                        : Flavor::Instance;
  return model;
}

SentenceModel parse_nlml(std::string_view markup, std::optional<Flavor> flavor) {
  return model_from_raw(parse_xml(markup), flavor);
}

std::string serialize_nlml(const SentenceModel& model, int indent) {
  Writer w(indent);
  w.open("sentence", " flavor=\"" + std::string(to_string(model.flavor)) + "\"");
  w.leaf("mood", to_string(model.mood));
  w.leaf("complexity", model.complexity);
  w.phrase_element("subject", model.subject);
  w.verb_phrase(model.verb_phrase);
  for (const auto& c : model.circumstances) w.circumstance(c);
  w.close("sentence");
  return w.str();
}

bool equal_canonical(const SentenceModel& a, const SentenceModel& b) {
  return serialize_nlml(a) == serialize_nlml(b);
}

}  // namespace gte
