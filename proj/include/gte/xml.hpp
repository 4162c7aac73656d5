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

// Minimal XML reader used for NLML documents and rule files. Supports
// elements, attributes, character data, comments, the XML declaration and
// the five predefined entities. No DTDs, no namespaces, no CDATA.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gte {

struct RawNode {
  std::string tag;
  std::map<std::string, std::string> attributes;
  // Character data. Whitespace-only data next to child elements is dropped,
  // so a node carries text or children but never both.
  std::string text;
  std::vector<RawNode> children;
  int line = 0;

  const RawNode* child(std::string_view name) const;
  std::vector<const RawNode*> children_named(std::string_view name) const;
  const std::string* attribute(std::string_view name) const;
};

// Throws Error(MalformedMarkup) with a line number on bad input. The
// document must have exactly one root element.
RawNode parse_xml(std::string_view source);

std::string xml_escape(std::string_view text);

}  // namespace gte
