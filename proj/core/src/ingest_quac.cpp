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

Followup followup_from_flag(const json& qa) {
  auto it = qa.find("followup");
  if (it == qa.end() || !it->is_string()) return Followup::Unannotated;
  std::string flag = it->get<std::string>();
  if (flag == "y") return Followup::Yes;
  if (flag == "n") return Followup::No;
  if (flag == "m") return Followup::Maybe;
  return Followup::Unannotated;
}

YesNo yesno_from_flag(const json& qa) {
  auto it = qa.find("yesno");
  if (it == qa.end() || !it->is_string()) return YesNo::Unannotated;
  std::string flag = it->get<std::string>();
  if (flag == "y") return YesNo::Yes;
  if (flag == "n") return YesNo::No;
  if (flag == "x") return YesNo::Neither;
  return YesNo::Unannotated;
}

AnswerRef answer_from_json(const json& node, const std::string& path) {
  AnswerRef ref;
  ref.text = detail::require_string(node, "text", path);
  std::int64_t start = detail::require_int(node, "answer_start", path);
  if (start >= 0) {
    ref.span = Span{static_cast<std::size_t>(start),
                    static_cast<std::size_t>(start) + ref.text.size()};
  }
  ref.no_answer = ref.text == no_answer_sentinel(Flavor::QuAC);
  return ref;
}

void derive_prev_positions(Conversation& conv) {
  for (std::size_t k = 1; k < conv.turns.size(); ++k) {
    if (conv.turns[k - 1].gold.span) {
      conv.turns[k].prev_answer_position = conv.turns[k - 1].gold.span;
    }
  }
}

}  // namespace

Corpus parse_quac(std::string_view bytes, std::string source) {
  json doc = detail::parse_document(bytes, "quac document");

  Corpus corpus;
  corpus.flavor = Flavor::QuAC;
  corpus.provenance.source = std::move(source);

  const json& articles = detail::require_array(doc, "data", "");
  for (std::size_t a = 0; a < articles.size(); ++a) {
    const std::string article_path = detail::element("data", a);
    const json& paragraphs = detail::require_array(articles[a], "paragraphs", article_path);
    for (std::size_t p = 0; p < paragraphs.size(); ++p) {
      const std::string para_path = detail::element(detail::child(article_path, "paragraphs"), p);
      const json& paragraph = paragraphs[p];

      Conversation conv;
      conv.flavor = Flavor::QuAC;
      conv.passage = detail::require_string(paragraph, "context", para_path);
      conv.id = detail::require_string(paragraph, "id", para_path);

      const json& qas = detail::require_array(paragraph, "qas", para_path);
      for (std::size_t q = 0; q < qas.size(); ++q) {
        const std::string qa_path = detail::element(detail::child(para_path, "qas"), q);
        const json& qa = qas[q];

        Turn turn;
        turn.turn_index = static_cast<int>(q) + 1;
        turn.question = detail::require_string(qa, "question", qa_path);
        turn.gold = answer_from_json(detail::require(qa, "orig_answer", qa_path),
                                     detail::child(qa_path, "orig_answer"));

        auto answers_it = qa.find("answers");
        if (answers_it != qa.end() && answers_it->is_array()) {
          for (std::size_t r = 0; r < answers_it->size(); ++r) {
            turn.references.push_back(answer_from_json(
                (*answers_it)[r], detail::element(detail::child(qa_path, "answers"), r)));
          }
        }
        if (turn.references.empty()) turn.references.push_back(turn.gold);

        turn.followup = followup_from_flag(qa);
        turn.yesno = yesno_from_flag(qa);
        conv.turns.push_back(std::move(turn));
      }
      derive_prev_positions(conv);
      corpus.conversations.push_back(std::move(conv));
    }
  }
  return corpus;
}

namespace {

json answer_to_json(const AnswerRef& ref) {
  json node;
  node["text"] = ref.text;
  node["answer_start"] = ref.span ? static_cast<std::int64_t>(ref.span->start) : -1;
  return node;
}

const char* followup_flag(Followup followup) {
  switch (followup) {
    case Followup::Yes: return "y";
    case Followup::No: return "n";
    case Followup::Maybe: return "m";
    case Followup::Unannotated: return nullptr;
  }
  return nullptr;
}

const char* yesno_flag(YesNo yesno) {
  switch (yesno) {
    case YesNo::Yes: return "y";
    case YesNo::No: return "n";
    case YesNo::Neither: return "x";
    case YesNo::Unannotated: return nullptr;
  }
  return nullptr;
}

}  // namespace

std::string serialize_quac(const Corpus& corpus) {
  if (corpus.flavor != Flavor::QuAC) {
    throw std::invalid_argument("serialize_quac: corpus flavor is not quac");
  }
  json doc;
  doc["data"] = json::array();
  for (const Conversation& conv : corpus.conversations) {
    json paragraph;
    paragraph["context"] = conv.passage;
    paragraph["id"] = conv.id;
    paragraph["qas"] = json::array();
    for (const Turn& turn : conv.turns) {
      json qa;
      qa["id"] = turn_key(conv.id, turn.turn_index);
      qa["question"] = turn.question;
      qa["orig_answer"] = answer_to_json(turn.gold);
      qa["answers"] = json::array();
      for (const AnswerRef& ref : turn.references) {
        qa["answers"].push_back(answer_to_json(ref));
      }
      if (const char* flag = followup_flag(turn.followup)) qa["followup"] = flag;
      if (const char* flag = yesno_flag(turn.yesno)) qa["yesno"] = flag;
      paragraph["qas"].push_back(std::move(qa));
    }
    json article;
    article["title"] = conv.id;
    article["paragraphs"] = json::array({std::move(paragraph)});
    doc["data"].push_back(std::move(article));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cqa
