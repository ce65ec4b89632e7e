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

#include <set>
#include <string>
#include <string_view>

#include "cqa/corpus.hpp"

namespace cqa {

/// Sentence spans that partition a passage: sorted, disjoint, and
/// concatenating them reproduces the text byte for byte. Inter-sentence
/// whitespace belongs to the preceding sentence, so every span boundary is a
/// clean insertion point.
struct SentenceMap {
  std::vector<Span> sentences;

  std::size_t size() const noexcept { return sentences.size(); }
  bool empty() const noexcept { return sentences.empty(); }
};

/// Inclusive range of sentence indices.
struct SentenceRange {
  std::size_t first = 0;
  std::size_t last = 0;

  bool operator==(const SentenceRange&) const = default;
};

/// Deterministic rule-based sentence segmentation. A boundary opens after a
/// run of {. ! ?} (plus any closing quotes or brackets) that is followed by
/// whitespace and an uppercase letter or an opening quote, unless the token
/// ending at a '.' is on the abbreviation stop-list ("Mr.", "U.S.", ...).
class Segmenter {
 public:
  /// Built-in English abbreviation stop-list.
  Segmenter();
  explicit Segmenter(std::set<std::string> abbreviations);

  /// Loads a stop-list file, one token per line; blank lines ignored.
  static Segmenter from_file(const std::string& path);

  SentenceMap segment(std::string_view text) const;

  const std::set<std::string>& abbreviations() const { return abbreviations_; }

 private:
  std::set<std::string> abbreviations_;
};

/// Minimal contiguous range of sentences whose union covers `span`. A
/// zero-length span selects the sentence whose half-open interval contains
/// its position. Throws std::out_of_range when the span does not fit the
/// segmented text.
SentenceRange sentences_covering(const SentenceMap& map, Span span);

}  // namespace cqa
