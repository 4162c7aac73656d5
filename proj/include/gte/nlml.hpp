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

// NLML reading and canonical writing.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gte/model.hpp"
#include "gte/xml.hpp"

namespace gte {

// Parses a `<sentence>`-rooted NLML document. Both the literal form
// "pseudo variable N" (in word, subject, noun, prem, pseudo and
// direct_object positions) and the canonical `<pseudo index kind/>` element
// are accepted and become PseudoSlot values.
//
// `flavor` comes from the surrounding context (pattern or entailment side of
// a rule). Without it the flavor is read from the root's `flavor` attribute
// or inferred: pattern if any pseudo slot or category is present, template
// if verb_change is present, instance otherwise. Both markers together
// without context raise ConflictingFlavor.
SentenceModel parse_nlml(std::string_view markup, std::optional<Flavor> flavor = std::nullopt);

// Same as parse_nlml, from an already parsed `<sentence>` element.
SentenceModel model_from_raw(const RawNode& sentence, std::optional<Flavor> flavor = std::nullopt);

// Canonical markup: fixed child order, two-space indentation, one element
// per line, trailing newline. `indent` shifts the whole block right, for
// embedding inside rule files.
std::string serialize_nlml(const SentenceModel& model, int indent = 0);

// Byte equality of canonical forms.
bool equal_canonical(const SentenceModel& a, const SentenceModel& b);

}  // namespace gte
