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

// Shared fixture access for the test binaries.

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gte/engine.hpp"
#include "gte/lexicon.hpp"
#include "gte/model.hpp"
#include "gte/rules.hpp"
#include "gte/taxonomy.hpp"

namespace gte::testing {

std::filesystem::path fixture_dir();
std::filesystem::path data_dir();
std::filesystem::path cli_path();

struct Fixture {
  Lexicon lexicon;
  Taxonomy taxonomy;
  RuleSet core;
  RuleSet extended;
};

// Loaded once per process.
const Fixture& fixture();

std::string read_file(const std::filesystem::path& path);
SentenceModel load_markup(const std::string& name, std::optional<Flavor> flavor = std::nullopt);

// Rule from the core set, by id.
const Rule& core_rule(int id);

// Realized texts of a closure, in order.
std::vector<std::string> closure_texts(const std::string& text, const RuleSet& rules,
                                       const ClosureOptions& options = {});

// Runs `cli_path() args...` and captures stdout; returns the exit status.
int run_cli_process(const std::string& args, std::string& output);

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace gte::testing
