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

// Internal helpers shared by the parsers: path-carrying field access on top
// of nlohmann::json, so malformed documents fail with "data[0].paragraphs[2]
// .qas[1].question: missing" instead of a bare type error.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cqa/corpus.hpp"

namespace cqa::detail {

using json = nlohmann::json;

inline json parse_document(std::string_view bytes, const char* what) {
  json doc = json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError(std::string(what) + ": not valid JSON");
  }
  return doc;
}

inline std::string child(const std::string& path, std::string_view key) {
  std::string out = path;
  if (!out.empty()) out += '.';
  out += key;
  return out;
}

inline std::string element(const std::string& path, std::size_t index) {
  return path + '[' + std::to_string(index) + ']';
}

inline const json& require(const json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (!node.is_object() || it == node.end()) {
    throw ParseError(child(path, key) + ": missing");
  }
  return *it;
}

inline std::string require_string(const json& node, const char* key, const std::string& path) {
  const json& value = require(node, key, path);
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  throw ParseError(child(path, key) + ": expected a string");
}

inline std::int64_t require_int(const json& node, const char* key, const std::string& path) {
  const json& value = require(node, key, path);
  if (!value.is_number_integer()) {
    throw ParseError(child(path, key) + ": expected an integer");
  }
  return value.get<std::int64_t>();
}

inline const json& require_array(const json& node, const char* key, const std::string& path) {
  const json& value = require(node, key, path);
  if (!value.is_array()) {
    throw ParseError(child(path, key) + ": expected an array");
  }
  return value;
}

}  // namespace cqa::detail
