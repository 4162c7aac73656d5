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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gte/cli.hpp"
#include "gte/json_codec.hpp"
#include "gte/nlml.hpp"
#include "gte/text_parser.hpp"
#include "support.hpp"

using namespace gte;
using namespace gte::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

// Sets an environment variable for the lifetime of the guard.
class EnvGuard {
 public:
  EnvGuard(const char* name, const std::string& value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    setenv(name, value.c_str(), 1);
  }
  ~EnvGuard() {
    if (old_) {
      setenv(name_, old_->c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

// Knowledge files come from the environment so every call finds the
// fixtures regardless of the working directory.
struct FixtureEnv {
  EnvGuard lexicon{"GTE_LEXICON", (fixture_dir() / "lexicon.tsv").string()};
  EnvGuard taxonomy{"GTE_TAXONOMY", (fixture_dir() / "taxonomy.tsv").string()};
  EnvGuard rules{"GTE_RULES", (fixture_dir() / "rules" / "core.xml").string()};
};

Run cli(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "gte");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string extended() { return (fixture_dir() / "rules" / "extended.xml").string(); }

}  // namespace

TEST_CASE("cli: entail prints one line per result") {
  FixtureEnv env;
  Run r = cli({"entail", "--text", "English is his mother language."});
  CHECK(r.code == 0);
  CHECK(r.out == "He can speak English.\n");

  Run price = cli({"entail", "--text", "What is the price of the book?"});
  CHECK(price.out == "How much is the book?\n");

  Run none = cli({"entail", "--text", "How much is the weather?"});
  CHECK(none.code == 0);
  CHECK(none.out.empty());
}

TEST_CASE("cli: entail formats") {
  FixtureEnv env;
  Run j = cli({"entail", "--text", "Zhang is a student.", "--format", "json"});
  REQUIRE(j.code == 0);
  Json doc = Json::parse(j.out);
  CHECK(doc["text"] == "Zhang is a student.");
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["derivation"] == Json::array({"hyponym:student→person"}));
  CHECK_FALSE(doc["results"][0].contains("model"));

  Run n = cli({"entail", "--text", "I study in Beijing University.", "--format", "nlml"});
  REQUIRE(n.code == 0);
  CHECK(realize(parse_nlml(n.out), fixture().lexicon) == "I attend Beijing University.");

  Run off = cli({"entail", "--text", "Zhang is a student.", "--logical", "off"});
  CHECK(off.out.empty());
  Run depth = cli({"entail", "--text", "Zhang is a student.", "--max-depth", "0"});
  CHECK(depth.code == 2);
  Run mode = cli({"entail", "--text", "Zhang is a student.", "--logical", "maybe"});
  CHECK(mode.code == 2);
}

TEST_CASE("cli: entail streams stdin lines") {
  FixtureEnv env;
  Run r = cli({"entail"}, "What is the price of the book?\n\nEnglish is his mother language.\n");
  CHECK(r.code == 0);
  CHECK(r.out == "How much is the book?\n\nHe can speak English.\n\n");

  Run bad = cli({"entail"}, "Read a book.\nZhang is a student.\n");
  CHECK(bad.code == 1);
  CHECK(bad.out == "\nZhang is a person.\n\n");
  CHECK(bad.err.find("OutOfCoverage") != std::string::npos);

  Run js = cli({"entail", "--format", "json"}, "Zhang is a student.\nI have a dog.\n");
  std::istringstream lines(js.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(Json::parse(line)["results"].size() == 1);
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("cli: domain and usage errors") {
  FixtureEnv env;
  CHECK(cli({"entail", "--text", "Read a book."}).code == 1);
  CHECK(cli({"entail", "--text", "The dog barks."}).code == 1);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"parse"}).code == 2);
  CHECK(cli({"entail", "--text", "x", "--rules", "/nonexistent.xml"}).code == 2);
  Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("entail") != std::string::npos);
}

TEST_CASE("cli: parse") {
  FixtureEnv env;
  Run r = cli({"parse", "--text", "I attend Beijing University.", "--format", "nlml"});
  CHECK(r.code == 0);
  SentenceModel m = parse_text("I attend Beijing University.", fixture().lexicon);
  CHECK(r.out == serialize_nlml(m));
  CHECK(cli({"parse", "--text", "I attend Beijing University."}).out == r.out);
  CHECK(cli({"parse", "--text", "I attend Beijing University.", "--format", "text"}).out ==
        "I attend Beijing University.\n");
  Json j = Json::parse(cli({"parse", "--text", "I attend Beijing University.", "--format",
                            "json"}).out);
  CHECK(sentence_from_json(j["model"]) == m);
}

TEST_CASE("cli: match") {
  FixtureEnv env;
  Run r = cli({"match", "--rule", "6", "--text", "What was the pen's price two years ago?"});
  CHECK(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["matched"] == true);
  CHECK(doc["sourceTense"] == "past");
  CHECK(doc["carried"] == Json::array({"two years ago"}));
  CHECK(doc["entailment"] == "How much was the pen two years ago?");

  Run miss = cli({"match", "--rule", "1", "--text", "I attend Beijing University."});
  CHECK(miss.code == 1);
  CHECK(Json::parse(miss.out)["trace"]["failedAt"] == "mood");
  CHECK(cli({"match", "--rule", "77", "--text", "I attend Beijing University."}).code == 1);
}

TEST_CASE("cli: validate-rules and self-test") {
  FixtureEnv env;
  Run v = cli({"validate-rules"});
  CHECK(v.code == 0);
  CHECK(v.out == "ok: 6 rules\n");
  Run ve = cli({"validate-rules", "--rules", extended(), "--format", "json"});
  CHECK(ve.code == 0);
  CHECK(Json::parse(ve.out)["findings"].empty());

  TempDir dir;
  std::string broken = read_file(fixture_dir() / "rules" / "core.xml");
  broken.replace(broken.find("<category>group</category>"), 26, "<category>grop</category>");
  std::ofstream(dir.path() / "bad.xml") << broken;
  Run bad = cli({"validate-rules", "--rules", (dir.path() / "bad.xml").string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("UnknownCategory") != std::string::npos);

  Run st = cli({"self-test"});
  CHECK(st.code == 0);
  CHECK(st.out.find("FAIL") == std::string::npos);
  Run sj = cli({"self-test", "--rules", extended(), "--format", "json"});
  CHECK(sj.code == 0);
  Json doc = Json::parse(sj.out);
  CHECK(doc["passed"] == doc["total"]);
}

TEST_CASE("cli: flags override the environment") {
  FixtureEnv env;
  EnvGuard rules{"GTE_RULES", extended()};
  CHECK(cli({"validate-rules"}).out == "ok: 20 rules\n");
  CHECK(cli({"validate-rules", "--rules", (fixture_dir() / "rules" / "core.xml").string()}).out ==
        "ok: 6 rules\n");
}

TEST_CASE("cli: bench") {
  FixtureEnv env;
  Run r = cli({"bench", "--rules", extended(), "--copies", "3", "--iterations", "5", "--format",
               "json"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["rules"] == 60);
  CHECK(doc["unique"] == 20);
  CHECK(doc["iterations"] == 5);
  CHECK(doc["results"].get<int>() >= 1);
  CHECK(doc["p50_ms"].get<double>() <= doc["p95_ms"].get<double>());
  CHECK(cli({"bench", "--copies", "0"}).code == 2);
  Run text = cli({"bench", "--rules", extended(), "--copies", "1", "--iterations", "2"});
  CHECK(text.out.find("p50_ms") != std::string::npos);
}

TEST_CASE("cli: resident memory is readable") { CHECK(resident_kib() > 0); }
