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

#include <cctype>
#include <map>

#include "json_util.hpp"

namespace cqa {

namespace {

using detail::json;

bool normalizes_to_unknown(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string lowered;
  lowered.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
  }
  return lowered == no_answer_sentinel(Flavor::CoQA);
}

AnswerRef answer_from_json(const json& node, const std::string& path) {
  AnswerRef ref;
  ref.text = detail::require_string(node, "input_text", path);
  std::int64_t start = detail::require_int(node, "span_start", path);
  std::int64_t end = detail::require_int(node, "span_end", path);
  if (start >= 0) {
    ref.span = Span{static_cast<std::size_t>(start), static_cast<std::size_t>(end)};
  }
  if (normalizes_to_unknown(ref.text)) {
    ref.no_answer = true;
    ref.text = no_answer_sentinel(Flavor::CoQA);
  }
  return ref;
}

}  // namespace

Corpus parse_coqa(std::string_view bytes, std::string source) {
  json doc = detail::parse_document(bytes, "coqa document");

  Corpus corpus;
  corpus.flavor = Flavor::CoQA;
  corpus.provenance.source = std::move(source);

  const json& stories = detail::require_array(doc, "data", "");
  for (std::size_t s = 0; s < stories.size(); ++s) {
    const std::string story_path = detail::element("data", s);
    const json& story = stories[s];

    Conversation conv;
    conv.flavor = Flavor::CoQA;
    conv.id = detail::require_string(story, "id", story_path);
    conv.passage = detail::require_string(story, "story", story_path);

    const json& questions = detail::require_array(story, "questions", story_path);
    const json& answers = detail::require_array(story, "answers", story_path);
    if (questions.size() != answers.size()) {
      throw ParseError(story_path + ": questions and answers differ in length (" +
                       std::to_string(questions.size()) + " vs " +
                       std::to_string(answers.size()) + ")");
    }

    // Additional answer sets, aligned to turns by turn_id.
    std::vector<std::map<std::int64_t, AnswerRef>> additional;
    auto add_it = story.find("additional_answers");
    if (add_it != story.end() && add_it->is_object()) {
      for (auto& [set_key, set_value] : add_it->items()) {
        const std::string set_path =
            detail::child(story_path, "additional_answers") + "." + set_key;
        if (!set_value.is_array()) {
          throw ParseError(set_path + ": expected an array");
        }
        std::map<std::int64_t, AnswerRef> by_turn;
        for (std::size_t r = 0; r < set_value.size(); ++r) {
          const std::string ref_path = detail::element(set_path, r);
          std::int64_t turn_id = detail::require_int(set_value[r], "turn_id", ref_path);
          by_turn.emplace(turn_id, answer_from_json(set_value[r], ref_path));
        }
        additional.push_back(std::move(by_turn));
      }
    }

    for (std::size_t q = 0; q < questions.size(); ++q) {
      const std::string question_path = detail::element(detail::child(story_path, "questions"), q);
      const std::string answer_path = detail::element(detail::child(story_path, "answers"), q);
      const std::int64_t expected_turn = static_cast<std::int64_t>(q) + 1;

      std::int64_t question_turn = detail::require_int(questions[q], "turn_id", question_path);
      std::int64_t answer_turn = detail::require_int(answers[q], "turn_id", answer_path);
      if (question_turn != answer_turn || question_turn != expected_turn) {
        throw ParseError(story_path + ": turn_id misalignment at turn " +
                         std::to_string(expected_turn) + " (question turn_id " +
                         std::to_string(question_turn) + ", answer turn_id " +
                         std::to_string(answer_turn) + ")");
      }

      Turn turn;
      turn.turn_index = static_cast<int>(expected_turn);
      turn.question = detail::require_string(questions[q], "input_text", question_path);
      turn.gold = answer_from_json(answers[q], answer_path);
      turn.references.push_back(turn.gold);
      for (const auto& set : additional) {
        auto ref_it = set.find(expected_turn);
        if (ref_it != set.end()) turn.references.push_back(ref_it->second);
      }
      conv.turns.push_back(std::move(turn));
    }

    for (std::size_t k = 1; k < conv.turns.size(); ++k) {
      if (conv.turns[k - 1].gold.span) {
        conv.turns[k].prev_answer_position = conv.turns[k - 1].gold.span;
      }
    }
    corpus.conversations.push_back(std::move(conv));
  }
  return corpus;
}

namespace {

json answer_to_json(const AnswerRef& ref, std::string_view passage, std::int64_t turn_id) {
  json node;
  node["span_start"] = ref.span ? static_cast<std::int64_t>(ref.span->start) : -1;
  node["span_end"] = ref.span ? static_cast<std::int64_t>(ref.span->end) : -1;
  node["span_text"] =
      ref.span && ref.span->end <= passage.size() ? std::string(span_text(passage, *ref.span)) : "";
  node["input_text"] = ref.text;
  node["turn_id"] = turn_id;
  return node;
}

}  // namespace

std::string serialize_coqa(const Corpus& corpus) {
  if (corpus.flavor != Flavor::CoQA) {
    throw std::invalid_argument("serialize_coqa: corpus flavor is not coqa");
  }
  json doc;
  doc["data"] = json::array();
  for (const Conversation& conv : corpus.conversations) {
    json story;
    story["id"] = conv.id;
    story["story"] = conv.passage;
    story["questions"] = json::array();
    story["answers"] = json::array();

    std::size_t extra_sets = 0;
    for (const Turn& turn : conv.turns) {
      if (turn.references.size() > 1) {
        extra_sets = std::max(extra_sets, turn.references.size() - 1);
      }
    }

    json additional = json::object();
    for (std::size_t set = 0; set < extra_sets; ++set) {
      additional[std::to_string(set)] = json::array();
    }

    for (const Turn& turn : conv.turns) {
      const std::int64_t turn_id = turn.turn_index;
      json question;
      question["input_text"] = turn.question;
      question["turn_id"] = turn_id;
      story["questions"].push_back(std::move(question));
      story["answers"].push_back(answer_to_json(turn.gold, conv.passage, turn_id));
      for (std::size_t set = 0; set < extra_sets; ++set) {
        if (set + 1 < turn.references.size()) {
          additional[std::to_string(set)].push_back(
              answer_to_json(turn.references[set + 1], conv.passage, turn_id));
        }
      }
    }
    if (extra_sets > 0) story["additional_answers"] = std::move(additional);
    doc["data"].push_back(std::move(story));
  }
  return doc.dump(2) + "\n";
}

std::string serialize_native(const Corpus& corpus) {
  return corpus.flavor == Flavor::QuAC ? serialize_quac(corpus) : serialize_coqa(corpus);
}

}  // namespace cqa
