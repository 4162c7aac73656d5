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

#include "gte/service.hpp"

#include <httplib.h>

#include <charconv>
#include <vector>

#include "gte/errors.hpp"
#include "gte/nlml.hpp"
#include "gte/text_parser.hpp"
#include "gte/transformer.hpp"

namespace gte {

namespace {

ServiceResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, Json{{"error", Json{{"code", code}, {"message", message}}}}};
}

ServiceResponse from_error(const Error& e) {
  int status = 400;
  switch (e.code()) {
    case ErrorCode::UnknownRule:
      status = 404;
      break;
    case ErrorCode::IoError:
      status = 500;
      break;
    default:
      break;
  }
  return error_response(status, e.code_name(), e.what());
}

std::optional<int> parse_id(std::string_view s) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v < 1) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

Rule rule_from_body(const Json& body) {
  if (body.is_object() && body.contains("xml")) {
    if (!body["xml"].is_string()) throw Error(ErrorCode::MalformedMarkup, "'xml' must be a string");
    return parse_rule(body["xml"].get<std::string>());
  }
  return rule_from_json(body);
}

std::string text_field(const Json& body) {
  if (!body.is_object() || !body.contains("text") || !body["text"].is_string()) {
    throw Error(ErrorCode::MalformedMarkup, "request needs a string 'text'");
  }
  return body["text"].get<std::string>();
}

Json rule_view(const Rule& r) {
  Json j = to_json(r);
  j["xml"] = serialize_rule(r);
  return j;
}

}  // namespace

Service::Service(const KnowledgeBase::Paths& paths) : rules_path_(paths.rules) {
  KnowledgeBase kb = KnowledgeBase::load(paths);
  snapshot_.lexicon = std::make_shared<const Lexicon>(std::move(kb.lexicon));
  snapshot_.taxonomy = std::make_shared<const Taxonomy>(std::move(kb.taxonomy));
  snapshot_.rules = std::make_shared<const RuleSet>(std::move(kb.rules));
}

Service::~Service() { stop(); }

Snapshot Service::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

ServiceResponse Service::handle(std::string_view method, std::string_view path,
                                std::string_view body) {
  auto parts = split_path(path);
  Json json;
  if (method == "POST" || method == "PUT") {
    json = Json::parse(body, nullptr, false);
    if (json.is_discarded()) return error_response(400, "BadRequest", "request body is not JSON");
  }
  try {
    if (parts.size() == 1 && parts[0] == "health") {
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return {200, Json{{"status", "ok"}, {"rules", snapshot().rules->size()}}};
    }
    if (parts.size() == 1 && parts[0] == "parse") {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      return parse(json);
    }
    if (parts.size() == 1 && parts[0] == "entail") {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      return entail(json);
    }
    if (!parts.empty() && parts[0] == "rules") {
      if (parts.size() == 1) {
        if (method == "GET") return get_rules();
        if (method == "POST") return put_rule(json, std::nullopt, true);
        return error_response(405, "MethodNotAllowed", "use GET or POST");
      }
      if (parts.size() == 2 && parts[1] == "test") {
        if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
        return test_rule(json);
      }
      if (parts.size() == 2) {
        auto id = parse_id(parts[1]);
        if (!id) return error_response(404, "UnknownRule", "no rule '" + std::string(parts[1]) + "'");
        if (method == "GET") return get_rule(*id);
        if (method == "PUT") return put_rule(json, id, false);
        if (method == "DELETE") return delete_rule(*id);
        return error_response(405, "MethodNotAllowed", "use GET, PUT or DELETE");
      }
    }
    return error_response(404, "NotFound", "no endpoint " + std::string(path));
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what());
  }
}

ServiceResponse Service::get_rules() const {
  Json list = Json::array();
  for (const Rule& r : *snapshot().rules) list.push_back(rule_view(r));
  return {200, Json{{"rules", std::move(list)}}};
}

ServiceResponse Service::get_rule(int id) const {
  auto snap = snapshot();
  const Rule* r = snap.rules->find(id);
  if (!r) return error_response(404, "UnknownRule", "no rule " + std::to_string(id));
  return {200, rule_view(*r)};
}

ServiceResponse Service::put_rule(const Json& body, std::optional<int> path_id, bool create) {
  Rule rule;
  try {
    rule = rule_from_body(body);
  } catch (const Error& e) {
    return error_response(422, e.code_name(), e.what());
  }
  if (path_id && rule.id != *path_id) {
    return error_response(400, "BadRequest", "rule id does not match the path");
  }
  std::lock_guard edit(edit_mutex_);
  auto snap = snapshot();
  std::vector<Rule> rules = snap.rules->rules();
  auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == rule.id; });
  if (create) {
    if (it != rules.end()) {
      Finding f{FindingKind::DuplicateId, rule.id, "a rule with this id already exists"};
      return {422, Json{{"findings", Json::array({to_json(f)})}}};
    }
    rules.push_back(rule);
  } else {
    if (it == rules.end()) return error_response(404, "UnknownRule", "no rule " + std::to_string(rule.id));
    *it = rule;
  }
  return commit(std::move(rules), {create ? 201 : 200, rule_view(rule)});
}

ServiceResponse Service::delete_rule(int id) {
  std::lock_guard edit(edit_mutex_);
  auto snap = snapshot();
  std::vector<Rule> rules = snap.rules->rules();
  auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == id; });
  if (it == rules.end()) return error_response(404, "UnknownRule", "no rule " + std::to_string(id));
  rules.erase(it);
  return commit(std::move(rules), {200, Json{{"deleted", id}}});
}

ServiceResponse Service::commit(std::vector<Rule> rules, ServiceResponse ok) {
  auto snap = snapshot();
  auto findings = validate(rules, snap.taxonomy.get());
  if (!findings.empty()) {
    Json list = Json::array();
    for (const auto& f : findings) list.push_back(to_json(f));
    return {422, Json{{"findings", std::move(list)}}};
  }
  auto next = std::make_shared<const RuleSet>(std::move(rules));
  save_rules(*next, rules_path_);
  std::lock_guard lock(snapshot_mutex_);
  snapshot_.rules = std::move(next);
  return ok;
}

ServiceResponse Service::test_rule(const Json& body) const {
  auto snap = snapshot();
  std::string text = text_field(body);
  Rule rule;
  if (body.contains("ruleId")) {
    if (!body["ruleId"].is_number_integer()) return error_response(400, "BadRequest", "'ruleId' must be an integer");
    const Rule* r = snap.rules->find(body["ruleId"].get<int>());
    if (!r) return error_response(404, "UnknownRule", "no rule " + body["ruleId"].dump());
    rule = *r;
  } else if (body.contains("rule")) {
    try {
      rule = rule_from_body(body["rule"]);
    } catch (const Error& e) {
      return error_response(422, e.code_name(), e.what());
    }
    auto findings = validate(rule, snap.taxonomy.get());
    if (!findings.empty()) {
      Json list = Json::array();
      for (const auto& f : findings) list.push_back(to_json(f));
      return {422, Json{{"findings", std::move(list)}}};
    }
  } else {
    return error_response(400, "BadRequest", "request needs 'ruleId' or 'rule'");
  }

  SentenceModel sentence = parse_text(text, *snap.lexicon);
  MatchTrace trace;
  auto outcome = match(rule.pattern, sentence, *snap.taxonomy, *snap.lexicon, &trace);
  Json out{{"ruleId", rule.id}, {"text", text}, {"matched", outcome.has_value()},
           {"trace", to_json(trace)}};
  if (!outcome) {
    out["entailment"] = nullptr;
    return {200, std::move(out)};
  }
  out["binding"] = to_json(outcome->binding);
  out["sourceTense"] = to_string(outcome->source_tense);
  Json carried = Json::array();
  for (const auto& c : outcome->carried_circumstances) carried.push_back(realize_circumstance(c));
  out["carried"] = std::move(carried);
  try {
    SentenceModel result = instantiate(rule.templ, *outcome, *snap.lexicon);
    out["entailment"] = Json{{"text", realize(result, *snap.lexicon)}, {"model", to_json(result)}};
  } catch (const Error& e) {
    out["entailment"] = nullptr;
    out["error"] = Json{{"code", e.code_name()}, {"message", e.what()}};
  }
  return {200, std::move(out)};
}

ServiceResponse Service::parse(const Json& body) const {
  auto snap = snapshot();
  std::string text = text_field(body);
  SentenceModel m = parse_text(text, *snap.lexicon);
  return {200, Json{{"text", text},
                    {"realized", realize(m, *snap.lexicon)},
                    {"model", to_json(m)},
                    {"nlml", serialize_nlml(m)}}};
}

ServiceResponse Service::entail(const Json& body) const {
  auto snap = snapshot();
  std::string text = text_field(body);
  ClosureOptions opts;
  if (body.contains("maxDepth")) {
    const Json& d = body["maxDepth"];
    if (!d.is_number_integer() || d.get<int>() < 1 || d.get<int>() > 10) {
      return error_response(400, "BadRequest", "'maxDepth' must be an integer in 1..10");
    }
    opts.max_depth = d.get<int>();
  }
  if (body.contains("logical")) {
    const Json& l = body["logical"];
    auto mode = l.is_string() ? parse_logical_mode(l.get<std::string>()) : std::nullopt;
    if (!mode) return error_response(400, "BadRequest", "'logical' must be always, fallback or off");
    opts.mode = *mode;
  }
  auto results = entail_closure(text, *snap.rules, *snap.taxonomy, *snap.lexicon, opts);
  Json list = Json::array();
  for (const auto& r : results) list.push_back(to_json(r));
  return {200, Json{{"text", text}, {"results", std::move(list)}}};
}

void Service::install_routes() {
  server_ = std::make_unique<httplib::Server>();
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json; charset=utf-8");
  };
  server_->Get(".*", route);
  server_->Post(".*", route);
  server_->Put(".*", route);
  server_->Delete(".*", route);
  server_->Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

bool Service::listen(const std::string& host, int port) {
  install_routes();
  return server_->listen(host, port);
}

int Service::bind_any_port(const std::string& host) {
  install_routes();
  return server_->bind_to_any_port(host);
}

bool Service::listen_after_bind() { return server_->listen_after_bind(); }

void Service::wait_until_ready() const { server_->wait_until_ready(); }

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace gte
