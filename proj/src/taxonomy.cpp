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

#include "gte/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gte/errors.hpp"
#include "gte/lexicon.hpp"

namespace gte {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

const std::vector<std::string> kNoParents;
const std::set<std::string> kNoAncestors;

}  // namespace

Taxonomy Taxonomy::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  Taxonomy t;
  for (const auto& [child, parent] : edges) {
    std::string c = to_lower(strip(child));
    std::string p = to_lower(strip(parent));
    t.edges_.emplace_back(c, p);
    auto& ps = t.parents_[c];
    if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    t.nodes_.insert(c);
    t.nodes_.insert(p);
  }
  t.build();
  return t;
}

Taxonomy Taxonomy::from_text(std::string_view tsv) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in{std::string(tsv)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    auto tab = s.find('\t');
    if (tab == std::string::npos || s.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::BadRow,
                  "line " + std::to_string(line_no) + ": expected child<TAB>parent");
    }
    std::string child = strip(s.substr(0, tab));
    std::string parent = strip(s.substr(tab + 1));
    if (child.empty() || parent.empty()) {
      throw Error(ErrorCode::BadRow, "line " + std::to_string(line_no) + ": empty node name");
    }
    edges.emplace_back(child, parent);
  }
  return from_edges(edges);
}

Taxonomy Taxonomy::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

// Depth-first search with colouring; a grey hit closes a cycle. Ancestor
// sets are filled in post-order so the graph is read-only afterwards.
void Taxonomy::build() {
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;

  auto visit = [&](auto&& self, const std::string& node) -> void {
    mark[node] = Mark::Grey;
    stack.push_back(node);
    std::set<std::string> up;
    if (auto it = parents_.find(node); it != parents_.end()) {
      for (const auto& p : it->second) {
        Mark m = mark.count(p) ? mark[p] : Mark::White;
        if (m == Mark::Grey) {
          auto from = std::find(stack.begin(), stack.end(), p);
          std::string path;
          for (auto i = from; i != stack.end(); ++i) path += *i + " -> ";
          path += p;
          throw Error(ErrorCode::CycleDetected, "taxonomy cycle: " + path);
        }
        if (m == Mark::White) self(self, p);
        up.insert(p);
        const auto& pa = closure_[p];
        up.insert(pa.begin(), pa.end());
      }
    }
    closure_[node] = std::move(up);
    stack.pop_back();
    mark[node] = Mark::Black;
  };

  for (const auto& node : nodes_) {
    if (!mark.count(node) || mark[node] == Mark::White) visit(visit, node);
  }
}

bool Taxonomy::is_instance(std::string_view word, std::string_view category) const {
  std::string w = to_lower(word);
  std::string c = to_lower(category);
  if (w == c) return contains(w);
  return ancestors(w).count(c) > 0;
}

const std::vector<std::string>& Taxonomy::hypernyms(std::string_view word) const {
  auto it = parents_.find(to_lower(word));
  return it == parents_.end() ? kNoParents : it->second;
}

const std::set<std::string>& Taxonomy::ancestors(std::string_view word) const {
  auto it = closure_.find(to_lower(word));
  return it == closure_.end() ? kNoAncestors : it->second;
}

bool Taxonomy::contains(std::string_view node) const { return nodes_.count(to_lower(node)) > 0; }

}  // namespace gte
