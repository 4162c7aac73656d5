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

// JSON mirror of the NLML object model. Keys are the NLML tag names, so a
// JSON sentence reads like its markup. Decoding is strict and round-trips
// every SentenceModel exactly.

#pragma once

#include <json.hpp>

#include "gte/engine.hpp"
#include "gte/matcher.hpp"
#include "gte/model.hpp"
#include "gte/rules.hpp"

namespace gte {

using Json = nlohmann::ordered_json;

Json to_json(const NounPhrase& np);
Json to_json(const SentenceModel& model);
Json to_json(const Fragment& fragment);
Json to_json(const Binding& binding);
Json to_json(const Rule& rule);
Json to_json(const Finding& finding);
Json to_json(const DerivationStep& step);
Json to_json(const EntailmentResult& result);
Json to_json(const MatchTrace& trace);

// Throw MalformedMarkup on missing or mistyped keys and BadFeatureValue on
// values outside the closed feature sets.
NounPhrase noun_phrase_from_json(const Json& j);
SentenceModel sentence_from_json(const Json& j);
Rule rule_from_json(const Json& j);

}  // namespace gte
