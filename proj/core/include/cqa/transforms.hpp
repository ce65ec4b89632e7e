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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cqa/corpus.hpp"
#include "cqa/segmenter.hpp"

namespace cqa {

struct Insertion {
  std::size_t position = 0;  // character index in the original passage
  std::string text;

  bool operator==(const Insertion&) const = default;
};

/// An ordered list of text insertions into one passage together with the
/// induced offset remap: original index i moves right by the total length of
/// all insertions at positions <= i. Construction sorts by position (stable)
/// and collapses exact (position, text) duplicates.
class InsertionPlan {
 public:
  InsertionPlan() = default;
  explicit InsertionPlan(std::vector<Insertion> insertions);

  const std::vector<Insertion>& insertions() const { return insertions_; }
  bool empty() const { return insertions_.empty(); }
  std::size_t collapsed() const { return collapsed_; }
  std::size_t total_inserted_length() const;

  /// Sum of insertion lengths at positions strictly below `position`.
  std::size_t shift_before(std::size_t position) const;
  /// Sum of insertion lengths at positions at or below `position`.
  std::size_t shift_at_or_before(std::size_t position) const;

  Span remap(Span span) const;
  std::string apply(std::string_view passage) const;

 private:
  std::vector<Insertion> insertions_;
  std::size_t collapsed_ = 0;
};

/// Remaps a span through the plan so that its substring in the edited passage
/// equals its substring in the original. Requires that no insertion position
/// falls strictly inside the span.
Span remap_span(const InsertionPlan& plan, Span span);

/// Builds the repeat-attack insertions for one conversation: for every turn
/// with a spanned, non-no-answer gold, one copy of the sentences covering the
/// gold span, inserted at the first sentence boundary after that covering
/// range which does not split any other retained span. Turns answered inside
/// the same sentences collapse to a single insertion.
InsertionPlan build_repeat_attack_plan(const Conversation& conv, const SentenceMap& map);

/// Repeats each answer's covering sentences after their original occurrence,
/// remapping every gold span, reference span and prev_answer_position onto
/// the original occurrence. Distances between consecutive answers can only
/// grow. Conversations without spanned answers pass through unchanged.
Corpus repeat_attack(const Corpus& corpus, const Segmenter& segmenter, int jobs = 1);

/// Interval union with overlapping and adjacent intervals merged.
std::vector<Span> merge_intervals(std::vector<Span> intervals);

/// Per-turn mask sets for one conversation: the mask of turn k is the merged
/// union of the gold spans of turns 1..k-1 (no-answer turns contribute
/// nothing). Turn 1 always has an empty mask.
struct MaskPlan {
  std::vector<std::vector<Span>> per_turn;
};
MaskPlan mask_previous_answers(const Conversation& conv);

/// Replaces every non-whitespace byte inside the intervals with `mask_char`,
/// preserving passage length so all offsets stay valid.
std::string render_masked(std::string_view passage, const std::vector<Span>& intervals,
                          char mask_char = '#');

/// Mask sidecar document: "<conv_id>#<turn>" -> list of [start, end) pairs;
/// with `render` set, each entry also carries the masked passage rendering.
std::string serialize_mask_sidecar(const Corpus& corpus, bool render = false,
                                   char mask_char = '#');

/// Removes every prev_answer_position; everything else is untouched.
Corpus strip_positions(const Corpus& corpus);

/// Splits every turn into an independent single-turn conversation with the
/// derived id "<conv_id>#<turn>"; no history, no position metadata.
Corpus strip_conversation(const Corpus& corpus);

/// Question of turn `turn_index` extended with the previous `window`
/// questions (interleaved with their answer texts when `include_answers`),
/// single-space separated, current question last.
std::string extended_question(const Conversation& conv, std::size_t turn_index, int window,
                              bool include_answers);

/// Flattens every turn into a single-turn record in the SQuAD v1.1 export
/// structure (data -> paragraphs -> {context, qas}).
std::string serialize_squad(const Corpus& corpus, int window, bool include_answers);

/// Maximal sentence groups glued so that no retained span crosses a group
/// boundary; the units a shuffle may permute.
std::vector<Span> shuffle_units(const Conversation& conv, const SentenceMap& map);

struct ShuffledConversation {
  Conversation conversation;
  std::vector<Span> units;              // original unit spans
  std::vector<std::size_t> permutation; // output slot -> original unit index
};

/// Seeded Fisher-Yates permutation of the shuffle units with all spans
/// remapped through it. The per-conversation generator is std::mt19937 over
/// std::seed_seq{seed_lo, seed_hi, fnv1a32(conversation id)}, so results are
/// reproducible and independent of processing order. For QuAC the final unit
/// carries the no-answer sentinel and stays pinned in place.
ShuffledConversation shuffle_conversation(const Conversation& conv, const Segmenter& segmenter,
                                          std::uint64_t seed);

Corpus shuffle_sentences(const Corpus& corpus, const Segmenter& segmenter, std::uint64_t seed,
                         int jobs = 1);

}  // namespace cqa
