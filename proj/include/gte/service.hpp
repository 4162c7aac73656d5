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

// HTTP/JSON front end: parsing, entailment and rule editing.

#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "gte/engine.hpp"
#include "gte/json_codec.hpp"

namespace httplib {
class Server;
}

namespace gte {

struct ServiceResponse {
  int status = 200;
  Json body;
};

// Immutable view of the knowledge the handlers read. Edits build a new
// snapshot and swap it in whole.
struct Snapshot {
  std::shared_ptr<const Lexicon> lexicon;
  std::shared_ptr<const Taxonomy> taxonomy;
  std::shared_ptr<const RuleSet> rules;
};

class Service {
 public:
  // Loads all three knowledge files; rule edits are written back to
  // paths.rules.
  explicit Service(const KnowledgeBase::Paths& paths);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Transport-independent request handling. `path` excludes the query.
  ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body);

  Snapshot snapshot() const;

  // Binds and serves until stop(). Returns false if the socket cannot be
  // bound.
  bool listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it, without serving yet.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

 private:
  ServiceResponse get_rules() const;
  ServiceResponse get_rule(int id) const;
  ServiceResponse put_rule(const Json& body, std::optional<int> path_id, bool create);
  ServiceResponse delete_rule(int id);
  ServiceResponse test_rule(const Json& body) const;
  ServiceResponse parse(const Json& body) const;
  ServiceResponse entail(const Json& body) const;
  // Validates, persists, then publishes `rules`; nothing changes on failure.
  ServiceResponse commit(std::vector<Rule> rules, ServiceResponse ok);
  void install_routes();

  std::filesystem::path rules_path_;
  mutable std::mutex snapshot_mutex_;
  Snapshot snapshot_;
  std::mutex edit_mutex_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace gte
