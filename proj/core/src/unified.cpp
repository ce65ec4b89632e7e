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

#include "cqa/ingest.hpp"

#include "json_util.hpp"

namespace cqa {

namespace {

using detail::json;

json answer_to_json(const AnswerRef& ref) {
  json node;
  node["text"] = ref.text;
  if (ref.span) {
    node["start"] = static_cast<std::int64_t>(ref.span->start);
    node["end"] = static_cast<std::int64_t>(ref.span->end);
  }
  node["no_answer"] = ref.no_answer;
  return node;
}

AnswerRef answer_from_json(const json& node, const std::string& path) {
  AnswerRef ref;
  ref.text = detail::require_string(node, "text", path);
  if (node.contains("start") || node.contains("end")) {
    std::int64_t start = detail::require_int(node, "start", path);
    std::int64_t end = detail::require_int(node, "end", path);
    if (start < 0 || end < start) {
      throw ParseError(path + ": malformed span");
    }
    ref.span = Span{static_cast<std::size_t>(start), static_cast<std::size_t>(end)};
  }
  const json& no_answer = detail::require(node, "no_answer", path);
  if (!no_answer.is_boolean()) {
    throw ParseError(detail::child(path, "no_answer") + ": expected a boolean");
  }
  ref.no_answer = no_answer.get<bool>();
  return ref;
}

}  // namespace

std::string serialize_corpus(const Corpus& corpus) {
  json doc;
  doc["version"] = kUnifiedVersion;
  doc["flavor"] = std::string(to_string(corpus.flavor));
  doc["source"] = corpus.provenance.source;
  doc["lineage"] = json::array();
  for (const LineageEntry& entry : corpus.provenance.lineage) {
    json node;
    node["name"] = entry.name;
    node["params"] = json::object();
    for (const auto& [key, value] : entry.params) {
      node["params"][key] = value;
    }
    doc["lineage"].push_back(std::move(node));
  }

  doc["conversations"] = json::array();
  for (const Conversation& conv : corpus.conversations) {
    json conv_node;
    conv_node["id"] = conv.id;
    conv_node["passage"] = conv.passage;
    conv_node["turns"] = json::array();
    for (const Turn& turn : conv.turns) {
      json turn_node;
      turn_node["turn"] = turn.turn_index;
      turn_node["question"] = turn.question;
      turn_node["gold"] = answer_to_json(turn.gold);
      turn_node["references"] = json::array();
      for (const AnswerRef& ref : turn.references) {
        turn_node["references"].push_back(answer_to_json(ref));
      }
      turn_node["followup"] = std::string(to_string(turn.followup));
      turn_node["yesno"] = std::string(to_string(turn.yesno));
      if (turn.prev_answer_position) {
        turn_node["prev_answer"]["start"] =
            static_cast<std::int64_t>(turn.prev_answer_position->start);
        turn_node["prev_answer"]["end"] =
            static_cast<std::int64_t>(turn.prev_answer_position->end);
      }
      conv_node["turns"].push_back(std::move(turn_node));
    }
    doc["conversations"].push_back(std::move(conv_node));
  }
  return doc.dump(2) + "\n";
}

Corpus parse_unified(std::string_view bytes) {
  json doc = detail::parse_document(bytes, "unified document");

  std::int64_t version = detail::require_int(doc, "version", "");
  if (version != kUnifiedVersion) {
    throw ParseError("unified document version " + std::to_string(version) +
                     " does not match expected version " + std::to_string(kUnifiedVersion));
  }

  Corpus corpus;
  corpus.flavor = flavor_from_string(detail::require_string(doc, "flavor", ""));
  corpus.provenance.source = detail::require_string(doc, "source", "");

  const json& lineage = detail::require_array(doc, "lineage", "");
  for (std::size_t i = 0; i < lineage.size(); ++i) {
    const std::string entry_path = detail::element("lineage", i);
    LineageEntry entry;
    entry.name = detail::require_string(lineage[i], "name", entry_path);
    const json& params = detail::require(lineage[i], "params", entry_path);
    if (!params.is_object()) {
      throw ParseError(detail::child(entry_path, "params") + ": expected an object");
    }
    for (auto& [key, value] : params.items()) {
      if (!value.is_number_integer()) {
        throw ParseError(detail::child(entry_path, "params") + "." + key +
                         ": expected an integer");
      }
      entry.params[key] = value.get<std::int64_t>();
    }
    corpus.provenance.lineage.push_back(std::move(entry));
  }

  const json& conversations = detail::require_array(doc, "conversations", "");
  for (std::size_t c = 0; c < conversations.size(); ++c) {
    const std::string conv_path = detail::element("conversations", c);
    const json& conv_node = conversations[c];

    Conversation conv;
    conv.flavor = corpus.flavor;
    conv.id = detail::require_string(conv_node, "id", conv_path);
    conv.passage = detail::require_string(conv_node, "passage", conv_path);

    const json& turns = detail::require_array(conv_node, "turns", conv_path);
    for (std::size_t t = 0; t < turns.size(); ++t) {
      const std::string turn_path = detail::element(detail::child(conv_path, "turns"), t);
      const json& turn_node = turns[t];

      Turn turn;
      turn.turn_index = static_cast<int>(detail::require_int(turn_node, "turn", turn_path));
      turn.question = detail::require_string(turn_node, "question", turn_path);
      turn.gold = answer_from_json(detail::require(turn_node, "gold", turn_path),
                                   detail::child(turn_path, "gold"));
      const json& references = detail::require_array(turn_node, "references", turn_path);
      for (std::size_t r = 0; r < references.size(); ++r) {
        turn.references.push_back(answer_from_json(
            references[r], detail::element(detail::child(turn_path, "references"), r)));
      }
      turn.followup = followup_from_string(detail::require_string(turn_node, "followup", turn_path));
      turn.yesno = yesno_from_string(detail::require_string(turn_node, "yesno", turn_path));
      if (turn_node.contains("prev_answer")) {
        const json& prev = turn_node["prev_answer"];
        const std::string prev_path = detail::child(turn_path, "prev_answer");
        std::int64_t start = detail::require_int(prev, "start", prev_path);
        std::int64_t end = detail::require_int(prev, "end", prev_path);
        if (start < 0 || end < start) {
          throw ParseError(prev_path + ": malformed span");
        }
        turn.prev_answer_position =
            Span{static_cast<std::size_t>(start), static_cast<std::size_t>(end)};
      }
      conv.turns.push_back(std::move(turn));
    }
    corpus.conversations.push_back(std::move(conv));
  }
  return corpus;
}

DocumentKind detect_document_kind(std::string_view bytes) {
  json doc = detail::parse_document(bytes, "corpus document");
  if (doc.is_object() && doc.contains("version") && doc.contains("conversations")) {
    return DocumentKind::Unified;
  }
  if (doc.is_object() && doc.contains("data") && doc["data"].is_array()) {
    const json& data = doc["data"];
    for (const json& entry : data) {
      if (!entry.is_object()) break;
      if (entry.contains("paragraphs")) return DocumentKind::QuacNative;
      if (entry.contains("story")) return DocumentKind::CoqaNative;
    }
    throw ParseError(
        "cannot infer document kind: native file with empty or unrecognized \"data\" "
        "(pass an explicit flavor)");
  }
  throw ParseError("unrecognized corpus document structure");
}

Corpus parse_any(std::string_view bytes, std::string source, std::optional<Flavor> flavor_hint) {
  DocumentKind kind;
  try {
    kind = detect_document_kind(bytes);
  } catch (const ParseError&) {
    // An empty native "data" cannot be sniffed; fall back on the hint.
    if (!flavor_hint) throw;
    kind = *flavor_hint == Flavor::QuAC ? DocumentKind::QuacNative : DocumentKind::CoqaNative;
  }

  Corpus corpus;
  switch (kind) {
    case DocumentKind::Unified:
      corpus = parse_unified(bytes);
      break;
    case DocumentKind::QuacNative:
      corpus = parse_quac(bytes, std::move(source));
      break;
    case DocumentKind::CoqaNative:
      corpus = parse_coqa(bytes, std::move(source));
      break;
  }
  if (flavor_hint && corpus.flavor != *flavor_hint) {
    throw ParseError(std::string("document flavor ") + std::string(to_string(corpus.flavor)) +
                     " does not match requested flavor " + std::string(to_string(*flavor_hint)));
  }
  return corpus;
}

}  // namespace cqa
