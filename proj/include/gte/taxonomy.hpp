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

// Flat word-level hypernym graph standing in for WordNet. Category names
// and ordinary words share one lower-cased namespace.

#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gte {

class Taxonomy {
 public:
  Taxonomy() = default;

  // child<TAB>parent per line, '#' comments. Throws IoError, BadRow or
  // CycleDetected (message lists the cycle).
  static Taxonomy load(const std::filesystem::path& path);
  static Taxonomy from_text(std::string_view tsv);
  static Taxonomy from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

  // word == category, or category is an ancestor of word.
  bool is_instance(std::string_view word, std::string_view category) const;
  // Direct parents, in file order.
  const std::vector<std::string>& hypernyms(std::string_view word) const;
  const std::set<std::string>& ancestors(std::string_view word) const;
  bool contains(std::string_view node) const;

  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

 private:
  void build();

  std::vector<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::vector<std::string>> parents_;
  std::map<std::string, std::set<std::string>> closure_;
  std::set<std::string> nodes_;
};

}  // namespace gte
