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

#include "ugceval/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ugceval/errors.hpp"
#include "ugceval/phenomena.hpp"
#include "ugceval/unicode.hpp"

namespace ugceval {

namespace {

const std::vector<std::string> kConfigOrder = {"none", "rocs-mt", "footweets",
                                               "mmtc", "pfsmb"};

std::size_t config_rank(const std::string& config) {
  for (std::size_t i = 0; i < kConfigOrder.size(); ++i)
    if (kConfigOrder[i] == config) return i;
  return kConfigOrder.size();
}

std::string marker_for(const GuidelineException* exception) {
  if (!exception) return "";
  if (exception->translate_if_grammatical_function) return "**";
  if (exception->expand_unless_unnatural) return "*";
  return "";
}

std::string cell_text(const GuidelineSet& set, PhenomenonKind kind) {
  return std::string(action_name(set.action_for(kind))) +
         marker_for(set.exception_for(kind));
}

}  // namespace

double threshold(std::string_view metric_name,
                 const std::map<std::string, double>* overrides) {
  std::string name(metric_name);
  if (overrides) {
    auto it = overrides->find(name);
    if (it != overrides->end()) return it->second;
  }
  if (name == "bleu") return 2.0;
  if (name.rfind("external:", 0) == 0) {
    std::string folded = uni::fold_case(name);
    if (folded.find("comet") != std::string::npos) return 0.5;
  }
  throw UnknownMetric(name);
}

std::vector<ComparisonCell> comparison_grid(
    std::span<const ScoredRun> runs,
    const std::map<std::string, std::string>& native_config_by_corpus,
    const std::map<std::string, double>* threshold_overrides) {
  // Baselines per (corpus, metric) from the "none" configuration.
  std::map<std::pair<std::string, std::string>, double> baseline;
  std::vector<std::string> corpus_order;
  for (const ScoredRun& run : runs) {
    if (std::find(corpus_order.begin(), corpus_order.end(), run.corpus) ==
        corpus_order.end())
      corpus_order.push_back(run.corpus);
    if (run.config == "none")
      for (const auto& [metric, value] : run.metric_values)
        baseline[{run.corpus, metric}] = value;
  }

  std::vector<ComparisonCell> cells;
  for (const std::string& corpus : corpus_order) {
    std::vector<const ScoredRun*> corpus_runs;
    for (const ScoredRun& run : runs)
      if (run.corpus == corpus) corpus_runs.push_back(&run);
    std::stable_sort(corpus_runs.begin(), corpus_runs.end(),
                     [](const ScoredRun* a, const ScoredRun* b) {
                       return config_rank(a->config) < config_rank(b->config);
                     });

    auto native = native_config_by_corpus.find(corpus);
    for (const ScoredRun* run : corpus_runs) {
      for (const auto& [metric, value] : run->metric_values) {
        auto anchor = baseline.find({corpus, metric});
        if (anchor == baseline.end()) throw MissingBaseline(corpus);
        ComparisonCell cell;
        cell.corpus = corpus;
        cell.config = run->config;
        cell.metric = metric;
        cell.value = value;
        cell.delta_vs_none = value - anchor->second;
        cell.meaningful =
            std::abs(cell.delta_vs_none) > threshold(metric, threshold_overrides);
        cell.matching = native != native_config_by_corpus.end() &&
                        run->config == native->second;
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

std::vector<EntityTableRow> entity_table(const ParallelCorpus& sources,
                                         std::span<const RunResult> runs) {
  auto count_rows = [](const std::vector<std::string>& lines, std::size_t denom,
                       std::string label) {
    EntityCounts sum;
    for (const std::string& line : lines) {
      EntityCounts counts = detect_entities(line);
      sum.urls += counts.urls;
      sum.mentions += counts.mentions;
      sum.hashtags += counts.hashtags;
    }
    EntityTableRow row;
    row.label = std::move(label);
    if (denom > 0) {
      row.urls = 100.0 * sum.urls / denom;
      row.mentions = 100.0 * sum.mentions / denom;
      row.hashtags = 100.0 * sum.hashtags / denom;
    }
    return row;
  };

  std::vector<EntityTableRow> rows;
  std::vector<std::string> source_lines;
  for (const Segment& segment : sources.segments)
    source_lines.push_back(segment.source);
  rows.push_back(count_rows(source_lines, source_lines.size(), "source"));

  for (const RunResult& run : runs) {
    std::vector<std::string> outputs;
    for (const SegmentOutput& output : run.outputs)
      outputs.push_back(output.status == OutputStatus::Ok && output.cleaned
                            ? *output.cleaned
                            : std::string());
    std::string label = run.params.model_id.empty() ? "run" : run.params.model_id;
    if (run.config.guideline_name() != "none")
      label += "+" + run.config.guideline_name();
    rows.push_back(count_rows(outputs, run.outputs.size(), std::move(label)));
  }
  return rows;
}

std::map<std::pair<std::string, std::string>, double> refusal_table(
    std::span<const RunResult> runs) {
  std::map<std::pair<std::string, std::string>, double> table;
  for (const RunResult& run : runs) {
    std::size_t refusals = 0;
    for (const SegmentOutput& output : run.outputs)
      if (output.status == OutputStatus::Refusal) ++refusals;
    double pct = run.outputs.empty()
                     ? 0.0
                     : 100.0 * static_cast<double>(refusals) / run.outputs.size();
    table[{run.corpus_name, run.config.guideline_name()}] = pct;
  }
  return table;
}

std::string action_matrix_tsv(std::span<const GuidelineSet> sets) {
  std::ostringstream out;
  out << "#\tphenomenon";
  for (const GuidelineSet& set : sets) out << '\t' << set.name();
  out << '\n';
  for (PhenomenonKind kind : all_phenomena()) {
    out << index_of(kind) << '\t' << display_name(kind);
    for (const GuidelineSet& set : sets) out << '\t' << cell_text(set, kind);
    out << '\n';
  }
  return out.str();
}

std::string action_matrix_text(std::span<const GuidelineSet> sets) {
  std::vector<std::size_t> widths;
  std::size_t label_width = 0;
  for (PhenomenonKind kind : all_phenomena())
    label_width = std::max(label_width,
                           std::to_string(index_of(kind)).size() + 2 +
                               display_name(kind).size());
  for (const GuidelineSet& set : sets) {
    std::size_t width = set.name().size();
    for (PhenomenonKind kind : all_phenomena())
      width = std::max(width, cell_text(set, kind).size());
    widths.push_back(width);
  }

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "  " << sets[i].name()
        << std::string(widths[i] - sets[i].name().size(), ' ');
  }
  out << '\n';
  for (PhenomenonKind kind : all_phenomena()) {
    std::string label =
        std::to_string(index_of(kind)) + ". " + std::string(display_name(kind));
    out << label << std::string(label_width - label.size(), ' ');
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::string cell = cell_text(sets[i], kind);
      out << "  " << cell << std::string(widths[i] - cell.size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ugceval
