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

#include <string>
#include <string_view>

#include "cqa/corpus.hpp"

namespace cqa {

/// Parses a QuAC release document (data -> articles -> paragraphs). One
/// conversation per paragraph; gold is orig_answer; prev_answer_position is
/// derived from the previous turn's gold span. Structural problems raise
/// ParseError with the failing path; annotation noise (e.g. offset drift) is
/// left for validate_corpus to report.
Corpus parse_quac(std::string_view bytes, std::string source = {});

/// Parses a CoQA release document (data -> stories with aligned question and
/// answer arrays, plus optional additional_answers keyed "0", "1", ...).
/// span_start = -1 yields an absent span.
Corpus parse_coqa(std::string_view bytes, std::string source = {});

/// Versioned unified corpus document: human-readable JSON with explicit
/// character offsets and the full transform lineage. parse_unified is the
/// exact inverse; re-serialization is byte-identical.
std::string serialize_corpus(const Corpus& corpus);
Corpus parse_unified(std::string_view bytes);

/// Re-emits a corpus in its flavor's release format (offsets rewritten in
/// place) so transformed data can drive existing model harnesses. Question
/// ids become turn keys "<conv_id>#<turn>". Throws std::invalid_argument on
/// a flavor mismatch.
std::string serialize_quac(const Corpus& corpus);
std::string serialize_coqa(const Corpus& corpus);

/// Dispatches on corpus.flavor.
std::string serialize_native(const Corpus& corpus);

enum class DocumentKind { Unified, QuacNative, CoqaNative };

/// Cheap structural sniff of an input document, used by the CLI to accept
/// unified and native inputs interchangeably.
DocumentKind detect_document_kind(std::string_view bytes);

/// Loads any supported corpus document. When `flavor_hint` is given it must
/// agree with the detected flavor.
Corpus parse_any(std::string_view bytes, std::string source = {},
                 std::optional<Flavor> flavor_hint = {});

inline constexpr int kUnifiedVersion = 1;

}  // namespace cqa
