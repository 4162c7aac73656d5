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

#include "gte/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gte/engine.hpp"
#include "gte/errors.hpp"
#include "gte/json_codec.hpp"
#include "gte/matcher.hpp"
#include "gte/nlml.hpp"
#include "gte/service.hpp"
#include "gte/text_parser.hpp"
#include "gte/transformer.hpp"

namespace gte {

namespace {

constexpr const char* kBenchText = "What was the pen's price two years ago?";

struct Options {
  std::string rules;
  std::string lexicon;
  std::string taxonomy;
  std::string verbs;
  std::string text;
  int rule_id = 0;
  int max_depth = 3;
  std::string logical = "fallback";
  std::string format;
  int copies = 500;
  int iterations = 100;
  int port = 8080;
  std::string host = "127.0.0.1";
};

// Flag, then environment, then the fixture default.
std::string resolve(const std::string& flag, const char* env, const char* fallback) {
  if (!flag.empty()) return flag;
  if (const char* v = std::getenv(env); v && *v) return v;
  return fallback;
}

KnowledgeBase::Paths paths_of(const Options& o, const char* default_rules) {
  KnowledgeBase::Paths p;
  p.rules = resolve(o.rules, "GTE_RULES", default_rules);
  p.lexicon = resolve(o.lexicon, "GTE_LEXICON", "fixtures/lexicon.tsv");
  p.taxonomy = resolve(o.taxonomy, "GTE_TAXONOMY", "fixtures/taxonomy.tsv");
  if (!o.verbs.empty()) p.verbs = o.verbs;
  return p;
}

struct Lexical {
  Lexicon lexicon;
  Taxonomy taxonomy;
};

Lexical load_lexical(const KnowledgeBase::Paths& p) {
  std::optional<std::filesystem::path> verbs = p.verbs;
  if (!verbs) {
    auto sibling = p.lexicon.parent_path() / "verbs.tsv";
    if (std::filesystem::exists(sibling)) verbs = sibling;
  }
  return {Lexicon::load(p.lexicon, verbs), Taxonomy::load(p.taxonomy)};
}

double percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  auto idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1) + 0.5);
  return v[std::min(idx, v.size() - 1)];
}

// Rule ids of copy k are shifted by k * stride so every copy stays valid.
RuleSet replicate(const std::vector<Rule>& unique, int copies) {
  int stride = 0;
  for (const auto& r : unique) stride = std::max(stride, r.id);
  std::vector<Rule> all;
  all.reserve(unique.size() * static_cast<std::size_t>(copies));
  for (int k = 0; k < copies; ++k) {
    for (const auto& r : unique) {
      Rule c = r;
      c.id += k * stride;
      if (c.reversed_id) *c.reversed_id += k * stride;
      all.push_back(std::move(c));
    }
  }
  return RuleSet(std::move(all));
}

class Commands {
 public:
  Commands(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err) {}

  int entail() {
    KnowledgeBase kb = KnowledgeBase::load(paths_of(o_, "fixtures/rules/core.xml"));
    ClosureOptions opts;
    opts.max_depth = o_.max_depth;
    opts.mode = *parse_logical_mode(o_.logical);
    const std::string format = o_.format.empty() ? "text" : o_.format;

    auto run_one = [&](const std::string& text, bool streaming) {
      try {
        auto results = entail_closure(text, kb.rules, kb.taxonomy, kb.lexicon, opts);
        if (format == "json") {
          Json list = Json::array();
          for (const auto& r : results) {
            Json j = to_json(r);
            j.erase("model");
            list.push_back(std::move(j));
          }
          Json doc{{"text", text}, {"results", std::move(list)}};
          out_ << (streaming ? doc.dump() : doc.dump(2)) << '\n';
        } else if (format == "nlml") {
          for (const auto& r : results) out_ << serialize_nlml(r.model);
        } else {
          for (const auto& r : results) out_ << r.text << '\n';
        }
        if (streaming && format == "text") out_ << '\n';
        return 0;
      } catch (const Error& e) {
        err_ << "error: " << e.code_name() << ": " << e.what() << '\n';
        // Keep streamed output aligned with the input lines.
        if (streaming && format == "text") out_ << '\n';
        if (streaming && format == "json") {
          out_ << Json{{"text", text}, {"error", {{"code", e.code_name()}, {"message", e.what()}}}}
                      .dump()
               << '\n';
        }
        return e.code() == ErrorCode::IoError ? 2 : 1;
      }
    };

    if (!o_.text.empty()) return run_one(o_.text, false);
    int status = 0;
    std::string line;
    while (std::getline(in_, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      status = std::max(status, run_one(line, true));
    }
    return status;
  }

  int parse() {
    Lexical lx = load_lexical(paths_of(o_, ""));
    SentenceModel m = parse_text(o_.text, lx.lexicon);
    const std::string format = o_.format.empty() ? "nlml" : o_.format;
    if (format == "text") {
      out_ << realize(m, lx.lexicon) << '\n';
    } else if (format == "json") {
      out_ << Json{{"realized", realize(m, lx.lexicon)}, {"model", to_json(m)}}.dump(2) << '\n';
    } else {
      out_ << serialize_nlml(m);
    }
    return 0;
  }

  int match_rule() {
    KnowledgeBase kb = KnowledgeBase::load(paths_of(o_, "fixtures/rules/core.xml"));
    const Rule* rule = kb.rules.find(o_.rule_id);
    if (!rule) throw Error(ErrorCode::UnknownRule, "no rule " + std::to_string(o_.rule_id));
    SentenceModel s = parse_text(o_.text, kb.lexicon);
    MatchTrace trace;
    auto outcome = match(rule->pattern, s, kb.taxonomy, kb.lexicon, &trace);
    Json doc{{"rule", rule->id}, {"matched", outcome.has_value()}, {"trace", to_json(trace)}};
    if (outcome) {
      doc["binding"] = to_json(outcome->binding);
      doc["sourceTense"] = to_string(outcome->source_tense);
      Json carried = Json::array();
      for (const auto& c : outcome->carried_circumstances) carried.push_back(realize_circumstance(c));
      doc["carried"] = std::move(carried);
      SentenceModel result = instantiate(rule->templ, *outcome, kb.lexicon);
      doc["entailment"] = realize(result, kb.lexicon);
    }
    out_ << doc.dump(2) << '\n';
    return outcome ? 0 : 1;
  }

  int validate_rules() {
    auto paths = paths_of(o_, "fixtures/rules/core.xml");
    Taxonomy taxonomy = Taxonomy::load(paths.taxonomy);
    auto rules = load_rule_list(paths.rules);
    auto findings = validate(rules, &taxonomy);
    if (o_.format == "json") {
      Json list = Json::array();
      for (const auto& f : findings) list.push_back(to_json(f));
      out_ << Json{{"rules", rules.size()}, {"findings", std::move(list)}}.dump(2) << '\n';
    } else {
      for (const auto& f : findings) {
        out_ << "rule " << f.rule_id << ": " << to_string(f.kind) << ": " << f.message << '\n';
      }
      if (findings.empty()) out_ << "ok: " << rules.size() << " rules\n";
    }
    return findings.empty() ? 0 : 1;
  }

  int self_test_rules() {
    KnowledgeBase kb = KnowledgeBase::load(paths_of(o_, "fixtures/rules/core.xml"));
    SelfTestReport report = self_test(kb.rules, kb.taxonomy, kb.lexicon);
    if (o_.format == "json") {
      Json rules = Json::array();
      for (const auto& r : report.rules) {
        Json ex = Json::array();
        for (const auto& e : r.examples) {
          ex.push_back(Json{{"source", e.example.source},
                            {"expect", e.example.expect},
                            {"passed", e.passed},
                            {"produced", e.produced},
                            {"error", e.error}});
        }
        rules.push_back(Json{{"ruleId", r.rule_id}, {"name", r.name}, {"passed", r.passed()},
                             {"examples", std::move(ex)}});
      }
      out_ << Json{{"passed", report.passed_count()}, {"total", report.example_count()},
                   {"rules", std::move(rules)}}
                  .dump(2)
           << '\n';
    } else {
      for (const auto& r : report.rules) {
        out_ << (r.passed() ? "PASS" : "FAIL") << " rule " << r.rule_id << " (" << r.name << ")\n";
        for (const auto& e : r.examples) {
          if (e.passed) continue;
          out_ << "  source:   " << e.example.source << "\n  expected: " << e.example.expect
               << "\n  produced: " << (e.produced.empty() ? "(nothing)" : e.produced.front())
               << '\n';
          if (!e.error.empty()) out_ << "  error:    " << e.error << '\n';
        }
      }
      out_ << report.passed_count() << "/" << report.example_count() << " examples passed\n";
    }
    return report.all_passed() ? 0 : 1;
  }

  int bench() {
    if (o_.copies < 1 || o_.iterations < 1) {
      err_ << "error: --copies and --iterations must be positive\n";
      return 2;
    }
    auto paths = paths_of(o_, "fixtures/rules/extended.xml");
    Lexical lx = load_lexical(paths);
    const std::string text = o_.text.empty() ? kBenchText : o_.text;
    SentenceModel sentence = parse_text(text, lx.lexicon);

    const long rss_before = resident_kib();
    auto unique = load_rule_list(paths.rules);
    RuleSet rules = replicate(unique, o_.copies);

    std::size_t result_count = 0;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(o_.iterations));
    entail_closure(sentence, rules, lx.taxonomy, lx.lexicon);  // warm-up
    for (int i = 0; i < o_.iterations; ++i) {
      auto t0 = std::chrono::steady_clock::now();
      auto results = entail_closure(sentence, rules, lx.taxonomy, lx.lexicon);
      auto t1 = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      result_count = results.size();
    }
    const long rss_delta = resident_kib() - rss_before;
    const double p50 = percentile(samples, 0.50);
    const double p95 = percentile(samples, 0.95);

    if (o_.format == "json") {
      out_ << Json{{"rules", rules.size()},
                   {"unique", unique.size()},
                   {"copies", o_.copies},
                   {"iterations", o_.iterations},
                   {"text", text},
                   {"results", result_count},
                   {"p50_ms", p50},
                   {"p95_ms", p95},
                   {"rss_delta_kib", rss_delta}}
                  .dump()
           << '\n';
    } else {
      out_ << std::fixed << std::setprecision(3) << "rules          " << rules.size() << " ("
           << unique.size() << " unique x " << o_.copies << ")\n"
           << "iterations     " << o_.iterations << "\n"
           << "results        " << result_count << "\n"
           << "p50_ms         " << p50 << "\n"
           << "p95_ms         " << p95 << "\n"
           << "rss_delta_kib  " << rss_delta << "\n";
    }
    return 0;
  }

  int serve() {
    Service service(paths_of(o_, "fixtures/rules/core.xml"));
    err_ << "listening on http://" << o_.host << ":" << o_.port << '\n';
    if (!service.listen(o_.host, o_.port)) {
      err_ << "error: cannot listen on " << o_.host << ":" << o_.port << '\n';
      return 2;
    }
    return 0;
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

void knowledge_flags(CLI::App* cmd, Options& o, bool with_rules = true) {
  if (with_rules) cmd->add_option("--rules", o.rules, "Rule XML file [GTE_RULES]");
  cmd->add_option("--lexicon", o.lexicon, "Lexicon TSV [GTE_LEXICON]");
  cmd->add_option("--taxonomy", o.taxonomy, "Taxonomy TSV [GTE_TAXONOMY]");
  cmd->add_option("--verbs", o.verbs, "Irregular verb TSV (default: verbs.tsv beside the lexicon)");
}

void format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "nlml", "json"}));
}

}  // namespace

long resident_kib() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmRSS:", 0) == 0) {
      std::istringstream fields(line.substr(6));
      long kib = 0;
      fields >> kib;
      return kib;
    }
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Rule-based textual entailment generator", "gte"};
  app.require_subcommand(1);

  auto* entail = app.add_subcommand("entail", "Print every entailment of a sentence");
  knowledge_flags(entail, o);
  entail->add_option("--text", o.text, "Input sentence (default: one sentence per stdin line)");
  entail->add_option("--max-depth", o.max_depth, "Closure depth")->check(CLI::Range(1, 10));
  entail->add_option("--logical", o.logical, "Hyponym entailment mode")
      ->check(CLI::IsMember({"always", "fallback", "off"}));
  format_flag(entail, o);

  auto* parse = app.add_subcommand("parse", "Parse a sentence into NLML");
  knowledge_flags(parse, o, false);
  parse->add_option("--text", o.text, "Input sentence")->required();
  format_flag(parse, o);

  auto* match = app.add_subcommand("match", "Match one rule against a sentence");
  knowledge_flags(match, o);
  match->add_option("--rule", o.rule_id, "Rule id")->required();
  match->add_option("--text", o.text, "Input sentence")->required();

  auto* validate_cmd = app.add_subcommand("validate-rules", "Check rule invariants");
  knowledge_flags(validate_cmd, o);
  format_flag(validate_cmd, o);

  auto* self_test_cmd = app.add_subcommand("self-test", "Run every rule's embedded examples");
  knowledge_flags(self_test_cmd, o);
  format_flag(self_test_cmd, o);

  auto* bench = app.add_subcommand("bench", "Time entailment against a replicated rule base");
  knowledge_flags(bench, o);
  bench->add_option("--copies", o.copies, "Copies of the rule file");
  bench->add_option("--iterations", o.iterations, "Timed runs");
  bench->add_option("--text", o.text, "Input sentence");
  format_flag(bench, o);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  knowledge_flags(serve, o);
  serve->add_option("--port", o.port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", o.host, "Bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Commands cmd(o, in, out, err);
  try {
    if (*entail) return cmd.entail();
    if (*parse) return cmd.parse();
    if (*match) return cmd.match_rule();
    if (*validate_cmd) return cmd.validate_rules();
    if (*self_test_cmd) return cmd.self_test_rules();
    if (*bench) return cmd.bench();
    if (*serve) return cmd.serve();
  } catch (const Error& e) {
    err << "error: " << e.code_name() << ": " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gte
