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

#ifndef UGCEVAL_REPORT_HPP_
#define UGCEVAL_REPORT_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ugceval/corpus.hpp"
#include "ugceval/llm_client.hpp"

namespace ugceval {

// Meaningful-difference threshold for a metric: 2.0 percentage points for
// BLEU, 0.5 for the external COMET-family metrics. Overrides may add or
// replace thresholds; unknown metrics throw UnknownMetric.
double threshold(std::string_view metric_name,
                 const std::map<std::string, double>* overrides = nullptr);

struct ComparisonCell {
  std::string corpus;
  std::string config;   // "none" or a guideline set name
  std::string metric;
  double value = 0.0;           // percentage
  double delta_vs_none = 0.0;   // signed percentage points
  bool meaningful = false;      // |delta| > threshold(metric)
  bool matching = false;        // config is the corpus' native guideline set
};

// One scored run: corpus-level metric values for a (corpus, configuration)
// pair, as percentages.
struct ScoredRun {
  std::string corpus;
  std::string config;
  std::map<std::string, double> metric_values;
};

// Builds the matching-vs-mismatching grid. Every corpus needs a "none"
// configuration to anchor deltas (MissingBaseline otherwise). Cells are
// ordered by corpus first appearance, then configuration presentation
// order (none, rocs-mt, footweets, mmtc, pfsmb, others), then metric.
// All cells are emitted; meaningful flags are annotations, not filters.
std::vector<ComparisonCell> comparison_grid(
    std::span<const ScoredRun> runs,
    const std::map<std::string, std::string>& native_config_by_corpus,
    const std::map<std::string, double>* threshold_overrides = nullptr);

struct EntityTableRow {
  std::string label;
  double urls = 0.0;      // per 100 lines
  double mentions = 0.0;
  double hashtags = 0.0;
};

// Social-media entity presence per 100 lines: first the corpus sources,
// then one row per run counted over its cleaned outputs (refused/empty
// outputs contribute nothing).
std::vector<EntityTableRow> entity_table(const ParallelCorpus& sources,
                                         std::span<const RunResult> runs);

// Refusal percentage per (corpus, configuration) pair.
std::map<std::pair<std::string, std::string>, double> refusal_table(
    std::span<const RunResult> runs);

// 12-row action matrix over guideline sets. Exception markers: * for
// expand-unless-unnatural, ** for grammatical-function hashtags.
std::string action_matrix_tsv(std::span<const GuidelineSet> sets);
std::string action_matrix_text(std::span<const GuidelineSet> sets);

}  // namespace ugceval

#endif  // UGCEVAL_REPORT_HPP_
