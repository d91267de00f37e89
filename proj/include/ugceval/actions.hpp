// Copyright 2026 The ugceval Authors
//
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

#ifndef UGCEVAL_ACTIONS_HPP_
#define UGCEVAL_ACTIONS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ugceval/corpus.hpp"
#include "ugceval/llm_client.hpp"
#include "ugceval/phenomena.hpp"

namespace ugceval {

// Source-surface to target-equivalent mapping ("LOL" -> {"MDR"},
// "#WorldCup" -> {"#CoupeDuMonde"}). Looked up by span surface for
// Transfer evidence and by span canonical for Normalise evidence.
class TransferLexicon {
 public:
  TransferLexicon() = default;
  TransferLexicon(std::string source_language, std::string target_language,
                  std::vector<std::pair<std::string, std::string>> pairs);

  // TSV rows `source_surface<TAB>target_equivalent`, one per equivalent,
  // with a `#pair src tgt` header line declaring the language pair.
  static TransferLexicon load(const std::filesystem::path& path);

  const std::string& source_language() const { return source_language_; }
  const std::string& target_language() const { return target_language_; }

  // Case-insensitive; empty when the surface has no equivalents.
  std::span<const std::string> equivalents(std::string_view surface) const;

 private:
  std::string source_language_;
  std::string target_language_;
  std::map<std::string, std::vector<std::string>> by_folded_surface_;
};

enum class Confidence { Rule, Heuristic };

struct ActionVerdict {
  PhenomenonSpan span;
  VerdictKind action = VerdictKind::Unknown;
  std::optional<std::string> evidence;  // matched target substring
  std::optional<std::pair<std::size_t, std::size_t>> evidence_range;
  Confidence confidence = Confidence::Heuristic;
};

struct ClassifyOptions {
  std::span<const Lexicon> source_lexicons;  // severity of the source span
  std::span<const Lexicon> target_lexicons;  // severity evidence in the target
  int min_run = kDefaultMinRun;              // elongation detection on targets
};

// Infers which action a translation applied to one detected span. First
// match wins: Copy (verbatim surface), Transfer (lexicon equivalent, or
// same-kind presence for elongation/capitalisation/punctuation), Censor
// (profanity kinds, no same-or-stronger-severity term in a non-empty
// translation), Normalise (canonical form or its lexicon rendering, or a
// fully standard target for punctuation/capitalisation), then Omit for
// hashtag/entity/emoji kinds and Unknown otherwise.
// Throws LanguageMismatch if the transfer lexicon declares a different
// target language.
ActionVerdict classify_action(const PhenomenonSpan& span, std::string_view source,
                              std::string_view translation,
                              const TransferLexicon* transfer_lex,
                              std::string_view target_language,
                              const ClassifyOptions& options = {});

struct KindTally {
  std::size_t total = 0;
  std::size_t compliant = 0;
  std::size_t noncompliant = 0;
  std::size_t unknown = 0;
};

struct ComplianceReport {
  std::map<PhenomenonKind, KindTally> per_kind;
  double overall_rate = 1.0;  // over decided verdicts; 1.0 when none

  std::size_t total() const;
  std::size_t compliant() const;
  std::size_t noncompliant() const;
  std::size_t unknown() const;
};

// A verdict is compliant iff it matches the prescription, with footnote
// flags honored: under expand_unless_unnatural a Copy of a natural-form
// acronym also complies, and under translate_if_grammatical_function a
// Copy of a hashtag also complies. Unknown verdicts are excluded from the
// rate. Permutation-invariant.
ComplianceReport score_compliance(std::span<const ActionVerdict> verdicts,
                                  const GuidelineSet& guidelines);

struct ClassifySetup {
  std::string source_language;  // language codes ("en", "fr", "de")
  std::string target_language;
  std::span<const Lexicon> source_lexicons;
  std::span<const Lexicon> target_lexicons;
  const TransferLexicon* transfer_lex = nullptr;
  int min_run = kDefaultMinRun;
};

// Detects spans on every corpus source line, classifies them against the
// aligned run outputs and sums the per-segment reports. Refused, empty and
// failed outputs contribute all their spans as Omit. Throws AlignmentError
// when outputs do not align 1:1 with the corpus.
ComplianceReport compliance_matrix(const ParallelCorpus& corpus, const RunResult& run,
                                   const GuidelineSet& guidelines,
                                   const ClassifySetup& setup);

// Classifies every span of one segment; shared by compliance_matrix and
// the CLI `classify` command.
std::vector<ActionVerdict> classify_segment(std::string_view source,
                                            std::string_view translation,
                                            const ClassifySetup& setup);

}  // namespace ugceval

#endif  // UGCEVAL_ACTIONS_HPP_
