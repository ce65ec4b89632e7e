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

#include "cqa/segmenter.hpp"

#include <cctype>
#include <fstream>

namespace cqa {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_terminal(char c) {
  return c == '.' || c == '!' || c == '?';
}

// Closing punctuation that may trail the terminal: ASCII quotes/brackets and
// the UTF-8 right quotes (U+201D, U+2019).
std::size_t skip_closers(std::string_view text, std::size_t pos) {
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '"' || c == '\'' || c == ')' || c == ']') {
      ++pos;
      continue;
    }
    if (pos + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
        static_cast<unsigned char>(text[pos + 1]) == 0x80) {
      unsigned char third = static_cast<unsigned char>(text[pos + 2]);
      if (third == 0x9D || third == 0x99) {  // ” ’
        pos += 3;
        continue;
      }
    }
    break;
  }
  return pos;
}

// A sentence opens with an uppercase letter or an opening quote (ASCII or
// UTF-8 U+201C / U+2018).
bool opens_sentence(std::string_view text, std::size_t pos) {
  char c = text[pos];
  if (std::isupper(static_cast<unsigned char>(c))) return true;
  if (c == '"' || c == '\'') return true;
  if (pos + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(text[pos + 1]) == 0x80) {
    unsigned char third = static_cast<unsigned char>(text[pos + 2]);
    return third == 0x9C || third == 0x98;  // “ ‘
  }
  return false;
}

// Token ending at (and including) the '.' at `dot`, with leading punctuation
// such as '(' or '"' stripped so "(U.S." still matches "U.S.".
std::string token_ending_at(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  while (begin < dot && !std::isalnum(static_cast<unsigned char>(text[begin]))) ++begin;
  return std::string(text.substr(begin, dot - begin + 1));
}

const std::set<std::string>& builtin_abbreviations() {
  static const std::set<std::string> abbreviations = {
      "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Prof.", "St.",   "Jr.",  "Sr.",
      "U.S.",  "U.K.",  "U.N.",  "D.C.",  "B.C.",  "A.D.",  "a.m.", "p.m.",
      "e.g.",  "i.e.",  "etc.",  "vs.",   "cf.",   "al.",   "Inc.", "Ltd.",
      "Co.",   "Corp.", "Gen.",  "Col.",  "Capt.", "Lt.",   "Sgt.", "Rev.",
      "Hon.",  "Gov.",  "Sen.",  "Rep.",  "Fig.",  "No.",   "Mt.",  "Ft.",
      "Jan.",  "Feb.",  "Mar.",  "Apr.",  "Jun.",  "Jul.",  "Aug.", "Sep.",
      "Sept.", "Oct.",  "Nov.",  "Dec.",
  };
  return abbreviations;
}

}  // namespace

Segmenter::Segmenter() : abbreviations_(builtin_abbreviations()) {}

Segmenter::Segmenter(std::set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

Segmenter Segmenter::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open abbreviation stop-list: " + path);
  }
  std::set<std::string> abbreviations;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || is_space(line.back()))) line.pop_back();
    std::size_t begin = 0;
    while (begin < line.size() && is_space(line[begin])) ++begin;
    if (begin < line.size()) abbreviations.insert(line.substr(begin));
  }
  return Segmenter(std::move(abbreviations));
}

SentenceMap Segmenter::segment(std::string_view text) const {
  SentenceMap map;
  if (text.empty()) return map;

  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    // Absorb the whole terminal run, then trailing closers.
    std::size_t run_end = i;
    while (run_end + 1 < text.size() && is_terminal(text[run_end + 1])) ++run_end;
    std::size_t after = skip_closers(text, run_end + 1);

    std::size_t next = after;
    while (next < text.size() && is_space(text[next])) ++next;
    bool boundary = next > after && next < text.size() && opens_sentence(text, next);

    if (boundary && text[run_end] == '.') {
      if (abbreviations_.contains(token_ending_at(text, run_end))) boundary = false;
    }

    if (boundary) {
      map.sentences.push_back({begin, next});
      begin = next;
      i = next;
    } else {
      i = run_end + 1;
    }
  }
  map.sentences.push_back({begin, text.size()});
  return map;
}

namespace {

std::size_t sentence_index_at(const SentenceMap& map, std::size_t pos) {
  // First sentence whose end is past pos; spans are sorted and disjoint.
  std::size_t lo = 0;
  std::size_t hi = map.sentences.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (map.sentences[mid].end <= pos) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

SentenceRange sentences_covering(const SentenceMap& map, Span span) {
  if (map.empty()) {
    throw std::out_of_range("sentences_covering: empty sentence map");
  }
  const std::size_t text_end = map.sentences.back().end;
  if (span.start > span.end || span.end > text_end) {
    throw std::out_of_range("sentences_covering: span out of bounds");
  }
  if (span.empty()) {
    // A zero-length span at the very end of the text belongs to the last
    // sentence; every other position is inside exactly one half-open span.
    std::size_t idx = span.start >= text_end ? map.sentences.size() - 1
                                             : sentence_index_at(map, span.start);
    return {idx, idx};
  }
  return {sentence_index_at(map, span.start), sentence_index_at(map, span.end - 1)};
}

}  // namespace cqa
