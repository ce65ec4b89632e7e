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

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cqa {

/// Half-open character interval [start, end) into an owning passage.
/// Character offsets are the canonical span currency throughout; word and
/// token views are always derived from them.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start; }
  bool empty() const noexcept { return start == end; }
  bool contains(std::size_t pos) const noexcept { return pos >= start && pos < end; }
  bool overlaps(const Span& other) const noexcept {
    return std::max(start, other.start) < std::min(end, other.end);
  }

  auto operator<=>(const Span&) const = default;
};

enum class Flavor { QuAC, CoQA };
enum class Followup { Yes, No, Maybe, Unannotated };
enum class YesNo { Yes, No, Neither, Unannotated };

std::string_view to_string(Flavor flavor);
std::string_view to_string(Followup followup);
std::string_view to_string(YesNo yesno);
Flavor flavor_from_string(std::string_view name);
Followup followup_from_string(std::string_view name);
YesNo yesno_from_string(std::string_view name);

/// Canonical no-answer text: "CANNOTANSWER" for QuAC, "unknown" for CoQA.
std::string_view no_answer_sentinel(Flavor flavor);

/// One annotated answer. For QuAC, `text` is always the passage substring at
/// `span`. For CoQA, `text` is the (possibly abstractive) answer while `span`
/// is the supporting rationale interval; the two need not agree verbatim.
struct AnswerRef {
  std::string text;
  std::optional<Span> span;
  bool no_answer = false;

  bool operator==(const AnswerRef&) const = default;
};

/// One question/answer exchange of a conversation.
struct Turn {
  int turn_index = 1;  // 1-based, contiguous within a conversation
  std::string question;
  AnswerRef gold;                    // primary reference (QuAC orig_answer / CoQA answer)
  std::vector<AnswerRef> references; // all human references, gold included
  Followup followup = Followup::Unannotated;
  YesNo yesno = YesNo::Unannotated;
  std::optional<Span> prev_answer_position;  // gold span of the previous turn

  bool operator==(const Turn&) const = default;
};

struct Conversation {
  std::string id;
  std::string passage;
  std::vector<Turn> turns;
  Flavor flavor = Flavor::QuAC;

  bool operator==(const Conversation&) const = default;
};

/// One applied transform, with its scalar parameters (seed, window, counts).
struct LineageEntry {
  std::string name;
  std::map<std::string, std::int64_t> params;

  bool operator==(const LineageEntry&) const = default;
};

/// Source filename plus the append-only list of transforms applied so far.
struct Provenance {
  std::string source;
  std::vector<LineageEntry> lineage;

  bool operator==(const Provenance&) const = default;
};

struct Corpus {
  Flavor flavor = Flavor::QuAC;
  Provenance provenance;
  std::vector<Conversation> conversations;

  bool operator==(const Corpus&) const = default;
};

/// A broken invariant found in corpus data. Violations are data, not
/// failures: parsers stay lenient on annotation noise and record it here.
struct Violation {
  std::string conversation_id;
  int turn = 0;  // 1-based turn index; 0 for conversation-level findings
  std::string message;
};

/// Exact substring at `span`. Throws std::out_of_range when the span does not
/// fit the passage.
std::string_view span_text(std::string_view passage, Span span);

/// Checks every type invariant of one conversation; an empty result means the
/// conversation is well formed.
std::vector<Violation> validate_conversation(const Conversation& conv);

/// Per-conversation checks plus corpus-level flavor uniformity.
std::vector<Violation> validate_corpus(const Corpus& corpus);

/// Stable turn identity used by prediction files, exports and sidecars.
std::string turn_key(std::string_view conversation_id, int turn_index);

/// Raised on malformed input documents; the message carries the failing path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cqa
