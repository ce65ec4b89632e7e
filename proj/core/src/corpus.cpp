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

#include "cqa/corpus.hpp"

#include <sstream>

namespace cqa {

std::string_view to_string(Flavor flavor) {
  return flavor == Flavor::QuAC ? "quac" : "coqa";
}

std::string_view to_string(Followup followup) {
  switch (followup) {
    case Followup::Yes: return "yes";
    case Followup::No: return "no";
    case Followup::Maybe: return "maybe";
    case Followup::Unannotated: return "unannotated";
  }
  return "unannotated";
}

std::string_view to_string(YesNo yesno) {
  switch (yesno) {
    case YesNo::Yes: return "yes";
    case YesNo::No: return "no";
    case YesNo::Neither: return "neither";
    case YesNo::Unannotated: return "unannotated";
  }
  return "unannotated";
}

Flavor flavor_from_string(std::string_view name) {
  if (name == "quac") return Flavor::QuAC;
  if (name == "coqa") return Flavor::CoQA;
  throw std::invalid_argument("unknown flavor: " + std::string(name));
}

Followup followup_from_string(std::string_view name) {
  if (name == "yes") return Followup::Yes;
  if (name == "no") return Followup::No;
  if (name == "maybe") return Followup::Maybe;
  if (name == "unannotated") return Followup::Unannotated;
  throw std::invalid_argument("unknown followup value: " + std::string(name));
}

YesNo yesno_from_string(std::string_view name) {
  if (name == "yes") return YesNo::Yes;
  if (name == "no") return YesNo::No;
  if (name == "neither") return YesNo::Neither;
  if (name == "unannotated") return YesNo::Unannotated;
  throw std::invalid_argument("unknown yesno value: " + std::string(name));
}

std::string_view no_answer_sentinel(Flavor flavor) {
  return flavor == Flavor::QuAC ? "CANNOTANSWER" : "unknown";
}

std::string_view span_text(std::string_view passage, Span span) {
  if (span.start > span.end || span.end > passage.size()) {
    std::ostringstream msg;
    msg << "span [" << span.start << ", " << span.end
        << ") out of range for passage of length " << passage.size();
    throw std::out_of_range(msg.str());
  }
  return passage.substr(span.start, span.length());
}

std::string turn_key(std::string_view conversation_id, int turn_index) {
  std::string key(conversation_id);
  key += '#';
  key += std::to_string(turn_index);
  return key;
}

namespace {

bool span_in_bounds(const Span& span, std::size_t passage_length) {
  return span.start <= span.end && span.end <= passage_length;
}

void check_answer(const Conversation& conv, const Turn& turn, const AnswerRef& ref,
                  const char* role, std::vector<Violation>& out) {
  if (ref.span) {
    if (!span_in_bounds(*ref.span, conv.passage.size())) {
      std::ostringstream msg;
      msg << role << " span [" << ref.span->start << ", " << ref.span->end
          << ") out of bounds for passage of length " << conv.passage.size();
      out.push_back({conv.id, turn.turn_index, msg.str()});
      return;
    }
    // QuAC answers are literal passage spans. CoQA spans point at the
    // rationale while the text may be abstractive, so no text check there.
    if (!ref.no_answer && conv.flavor == Flavor::QuAC) {
      std::string_view at_span = span_text(conv.passage, *ref.span);
      if (at_span != ref.text) {
        std::ostringstream msg;
        msg << role << " text/span mismatch: span text \"" << at_span
            << "\" != answer text \"" << ref.text << "\"";
        out.push_back({conv.id, turn.turn_index, msg.str()});
      }
    }
  }
  if (ref.no_answer && ref.text != no_answer_sentinel(conv.flavor)) {
    std::ostringstream msg;
    msg << role << " marked no-answer but text is \"" << ref.text
        << "\" instead of the sentinel \"" << no_answer_sentinel(conv.flavor) << "\"";
    out.push_back({conv.id, turn.turn_index, msg.str()});
  }
}

}  // namespace

std::vector<Violation> validate_conversation(const Conversation& conv) {
  std::vector<Violation> out;

  if (conv.flavor == Flavor::QuAC && !conv.passage.ends_with(no_answer_sentinel(Flavor::QuAC))) {
    out.push_back({conv.id, 0, "QuAC passage does not terminate with the CANNOTANSWER sentinel"});
  }

  for (std::size_t i = 0; i < conv.turns.size(); ++i) {
    const Turn& turn = conv.turns[i];
    const int expected = static_cast<int>(i) + 1;
    if (turn.turn_index != expected) {
      std::ostringstream msg;
      msg << "turn_index " << turn.turn_index << " breaks 1-based contiguity (expected "
          << expected << ")";
      out.push_back({conv.id, turn.turn_index, msg.str()});
    }

    check_answer(conv, turn, turn.gold, "gold", out);
    for (const AnswerRef& ref : turn.references) {
      check_answer(conv, turn, ref, "reference", out);
    }

    if (turn.prev_answer_position) {
      if (i == 0) {
        out.push_back({conv.id, turn.turn_index,
                       "first turn carries a prev_answer_position"});
      } else {
        const std::optional<Span>& prev_gold = conv.turns[i - 1].gold.span;
        if (!prev_gold) {
          out.push_back({conv.id, turn.turn_index,
                         "prev_answer_position present but previous gold has no span"});
        } else if (*prev_gold != *turn.prev_answer_position) {
          std::ostringstream msg;
          msg << "prev_answer_position [" << turn.prev_answer_position->start << ", "
              << turn.prev_answer_position->end << ") does not equal previous gold span ["
              << prev_gold->start << ", " << prev_gold->end << ")";
          out.push_back({conv.id, turn.turn_index, msg.str()});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_corpus(const Corpus& corpus) {
  std::vector<Violation> out;
  for (const Conversation& conv : corpus.conversations) {
    if (conv.flavor != corpus.flavor) {
      out.push_back({conv.id, 0, "conversation flavor differs from corpus flavor"});
    }
    std::vector<Violation> conv_violations = validate_conversation(conv);
    out.insert(out.end(), conv_violations.begin(), conv_violations.end());
  }
  return out;
}

}  // namespace cqa
