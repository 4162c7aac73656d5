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

#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "gte/nlml.hpp"

namespace gte::testing {

std::filesystem::path fixture_dir() { return GTE_FIXTURE_DIR; }
std::filesystem::path data_dir() { return GTE_TEST_DATA_DIR; }
std::filesystem::path cli_path() { return GTE_CLI_PATH; }

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture x;
    x.lexicon = Lexicon::load(fixture_dir() / "lexicon.tsv", fixture_dir() / "verbs.tsv");
    x.taxonomy = Taxonomy::load(fixture_dir() / "taxonomy.tsv");
    x.core = load_rules(fixture_dir() / "rules" / "core.xml");
    x.extended = load_rules(fixture_dir() / "rules" / "extended.xml");
    return x;
  }();
  return f;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SentenceModel load_markup(const std::string& name, std::optional<Flavor> flavor) {
  return parse_nlml(read_file(data_dir() / (name + ".xml")), flavor);
}

const Rule& core_rule(int id) { return *fixture().core.find(id); }

std::vector<std::string> closure_texts(const std::string& text, const RuleSet& rules,
                                       const ClosureOptions& options) {
  const auto& f = fixture();
  std::vector<std::string> out;
  for (const auto& r : entail_closure(text, rules, f.taxonomy, f.lexicon, options)) {
    out.push_back(r.text);
  }
  return out;
}

int run_cli_process(const std::string& args, std::string& output) {
  std::string cmd = "cd '" + fixture_dir().parent_path().string() + "' && '" + cli_path().string() +
                    "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  output.clear();
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TempDir::TempDir() {
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() / ("gte-test-" + std::to_string(rd()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace gte::testing
