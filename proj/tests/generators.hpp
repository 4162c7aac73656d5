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

// Seeded random generators for the property tests.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "gte/lexicon.hpp"
#include "gte/matcher.hpp"
#include "gte/model.hpp"
#include "gte/rules.hpp"
#include "gte/taxonomy.hpp"

namespace gte::testing {

using Rng = std::mt19937;

// Structurally valid model of the given flavor, words drawn from a small
// vocabulary that includes markup-special characters.
SentenceModel random_model(Rng& rng, Flavor flavor);

// Instance noun phrases in normal form, parsed from "It is <np>." carriers.
const std::vector<NounPhrase>& noun_phrase_pool();

// A binding for every slot of `pattern` that satisfies its category and
// head-type constraints; nullopt when the pool has no candidate.
std::optional<Binding> random_binding(Rng& rng, const SentenceModel& pattern);

// Pattern with its flavor switched to template, so instantiate can fill it.
SentenceModel as_template(const SentenceModel& pattern);

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

}  // namespace gte::testing
