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

#ifndef UGCEVAL_METRICS_HPP_
#define UGCEVAL_METRICS_HPP_

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ugceval/llm_client.hpp"

namespace ugceval {

struct BleuScore {
  double score = 0.0;                     // percentage in [0, 100]
  std::array<double, 4> precisions{};     // clipped n-gram fractions in [0, 1]
  double brevity_penalty = 1.0;
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
  std::array<std::size_t, 4> correct{};
  std::array<std::size_t, 4> total{};
};

enum class BleuSmoothing { None, Exponential };

// mteval-13a tokenization as fixed by the WMT/SacreBLEU `tok:13a` scheme:
// entity unescaping, symbol padding, digit-aware period/comma/dash
// splitting, whitespace collapse. Case is preserved.
std::vector<std::string> tokenize_13a(std::string_view text);

// Corpus-level BLEU over pooled clipped n-gram counts; no smoothing by
// default (`eff:no` behavior: a zero precision zeroes the score). Multiple
// references use max-clipping and the closest reference length (ties to
// the shorter one). Throws LengthMismatch unless |hyps| == |refs| >= 1.
BleuScore corpus_bleu(std::span<const std::string> hyps,
                      std::span<const std::vector<std::string>> refs,
                      int max_n = 4,
                      BleuSmoothing smoothing = BleuSmoothing::None);

// Sentence-level BLEU: exponential smoothing of zero counts (halving floor
// per affected order) and effective n-gram order, the reference
// implementation's sentence-scoring defaults.
BleuScore sentence_bleu(std::string_view hyp, std::span<const std::string> refs,
                        int max_n = 4);

struct SegmentScore {
  std::string segment_id;
  std::string metric_name;  // "bleu" or "external:<name>"
  double value = 0.0;
  bool zeroed = false;  // empty-output substitution applied
};

struct ScoreIngest {
  std::vector<SegmentScore> scores;
  std::vector<std::string> missing_ids;  // run segments absent from the file
};

// Joins an external score file (TSV `segment_id<TAB>score`) against a run.
// Segments whose output is a refusal or empty get value 0 with
// zeroed=true; run segments missing from the file are reported, file rows
// with unknown ids throw UnknownSegmentId.
ScoreIngest ingest_external_scores(const std::filesystem::path& path,
                                   const std::string& metric_name,
                                   const RunResult& run);

// Corpus aggregate under the percentage convention: arithmetic mean x 100
// (external scores are ingested as fractions).
double corpus_average_pct(std::span<const SegmentScore> scores);

}  // namespace ugceval

#endif  // UGCEVAL_METRICS_HPP_
