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

#include "ugceval/actions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ugceval/errors.hpp"
#include "ugceval/unicode.hpp"

namespace ugceval {

namespace {

// Word-boundary-aware occurrence search. Boundaries are only required on
// needle edges that are word characters, so "#lrt" and ":((" match by plain
// substring while "rn" will not match inside "morning".
std::optional<std::pair<std::size_t, std::size_t>> find_occurrence(
    const std::u32string& haystack, const std::u32string& raw_haystack,
    std::u32string_view needle) {
  if (needle.empty()) return std::nullopt;
  const bool left_needs_boundary = uni::is_word_char(needle.front());
  const bool right_needs_boundary = uni::is_word_char(needle.back());
  std::size_t i = 0;
  while (i + needle.size() <= haystack.size()) {
    if (haystack.compare(i, needle.size(), needle) != 0) {
      ++i;
      continue;
    }
    std::size_t j = i + needle.size();
    bool left_ok = !left_needs_boundary || i == 0 || !uni::is_word_char(raw_haystack[i - 1]);
    bool right_ok = !right_needs_boundary || j == raw_haystack.size() ||
                    !uni::is_word_char(raw_haystack[j]);
    if (left_ok && right_ok) return std::make_pair(i, j);
    ++i;
  }
  return std::nullopt;
}

std::u32string fold_u32(std::u32string s) {
  for (char32_t& c : s) c = uni::to_lower(c);
  return s;
}

struct Target {
  std::u32string raw;
  std::u32string folded;
  bool empty_after_trim = true;

  explicit Target(std::string_view translation) {
    raw = uni::decode(translation);
    folded = fold_u32(raw);
    for (char32_t c : raw)
      if (!uni::is_space(c)) {
        empty_after_trim = false;
        break;
      }
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_exact(
      std::string_view needle) const {
    return find_occurrence(raw, raw, uni::decode(needle));
  }
  std::optional<std::pair<std::size_t, std::size_t>> find_ci(
      std::string_view needle) const {
    return find_occurrence(folded, raw, fold_u32(uni::decode(needle)));
  }
  std::string slice(std::pair<std::size_t, std::size_t> range) const {
    return uni::encode(
        std::u32string_view(raw).substr(range.first, range.second - range.first));
  }
};

std::optional<Severity> lookup_severity(std::span<const Lexicon> lexicons,
                                        std::string_view term) {
  for (const Lexicon& lexicon : lexicons) {
    const LexiconEntry* entry = lexicon.find(term);
    if (entry && entry->kind == PhenomenonKind::OvertProfanity)
      return entry->severity.value_or(Severity::Strong);
  }
  return std::nullopt;
}

bool is_profanity_kind(PhenomenonKind kind) {
  return kind == PhenomenonKind::OvertProfanity ||
         kind == PhenomenonKind::SelfCensoredProfanity;
}

bool is_shape_kind(PhenomenonKind kind) {
  return kind == PhenomenonKind::WordElongation ||
         kind == PhenomenonKind::Capitalisation ||
         kind == PhenomenonKind::AtypicalPunctuation;
}

// Spans of `kind` detected in the translation, used both for the
// same-kind Transfer rule and the fully-standard Normalise rule.
std::vector<PhenomenonSpan> detect_kind_in_target(PhenomenonKind kind,
                                                  std::string_view translation,
                                                  std::string_view target_language,
                                                  const ClassifyOptions& options) {
  switch (kind) {
    case PhenomenonKind::WordElongation:
      return detect_elongation(translation, options.min_run,
                               builtin_wordlist(target_language));
    case PhenomenonKind::Capitalisation:
      return detect_capitalisation(translation, target_language,
                                   options.target_lexicons);
    case PhenomenonKind::AtypicalPunctuation:
      return detect_punctuation(translation, target_language);
    default:
      return {};
  }
}

}  // namespace

TransferLexicon::TransferLexicon(
    std::string source_language, std::string target_language,
    std::vector<std::pair<std::string, std::string>> pairs)
    : source_language_(std::move(source_language)),
      target_language_(std::move(target_language)) {
  for (auto& [surface, equivalent] : pairs) {
    if (surface.empty() || equivalent.empty())
      throw Error("transfer lexicon entries must be non-empty");
    by_folded_surface_[uni::fold_case(surface)].push_back(std::move(equivalent));
  }
}

TransferLexicon TransferLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open transfer lexicon: " + path.string());
  std::string source_language, target_language;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // Hashtag surfaces start with '#': only the pair directive and
    // "# "-style comments are special.
    if (line.rfind("#pair ", 0) == 0) {
      std::istringstream header(line.substr(6));
      header >> source_language >> target_language;
      continue;
    }
    if (line.rfind("# ", 0) == 0 || line == "#") continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw MalformedRecord(line_no, "expected source<TAB>target");
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return TransferLexicon(std::move(source_language), std::move(target_language),
                         std::move(pairs));
}

std::span<const std::string> TransferLexicon::equivalents(
    std::string_view surface) const {
  auto it = by_folded_surface_.find(uni::fold_case(surface));
  if (it == by_folded_surface_.end()) return {};
  return it->second;
}

namespace {

ActionVerdict classify_impl(const PhenomenonSpan& span,
                            std::string_view translation,
                            const TransferLexicon* transfer_lex,
                            std::string_view target_language,
                            const ClassifyOptions& options) {
  ActionVerdict verdict;
  verdict.span = span;

  const Target target(translation);
  const bool decidable = !target.empty_after_trim;

  // (1) Copy: the surface occurs verbatim.
  if (!span.surface.empty()) {
    if (auto range = target.find_exact(span.surface)) {
      verdict.action = VerdictKind::Copy;
      verdict.evidence = span.surface;
      verdict.evidence_range = range;
      verdict.confidence = Confidence::Rule;
      return verdict;
    }
  }

  // (2) Transfer: a lexicon equivalent occurs, or the same phenomenon kind
  // shows up in the translation for the shape-like kinds.
  if (decidable && transfer_lex) {
    for (const std::string& equivalent : transfer_lex->equivalents(span.surface)) {
      if (auto range = target.find_ci(equivalent)) {
        verdict.action = VerdictKind::Transfer;
        verdict.evidence = target.slice(*range);
        verdict.evidence_range = range;
        verdict.confidence = Confidence::Rule;
        return verdict;
      }
    }
  }
  if (decidable && is_shape_kind(span.kind)) {
    std::vector<PhenomenonSpan> target_spans =
        detect_kind_in_target(span.kind, translation, target_language, options);
    if (!target_spans.empty()) {
      verdict.action = VerdictKind::Transfer;
      if (!target_spans.front().surface.empty()) {
        verdict.evidence = target_spans.front().surface;
        verdict.evidence_range = {target_spans.front().begin,
                                  target_spans.front().end};
      }
      verdict.confidence = Confidence::Heuristic;
      return verdict;
    }
  }

  // (3) Censor: profanity with no same-or-stronger-severity term left in a
  // non-empty translation ("casse couille" -> "a rough awakening").
  if (decidable && is_profanity_kind(span.kind)) {
    const std::string& term =
        span.canonical && !span.canonical->empty() ? *span.canonical : span.surface;
    Severity span_severity =
        lookup_severity(options.source_lexicons, term).value_or(Severity::Strong);
    bool same_or_stronger = false;
    std::optional<std::pair<std::size_t, std::size_t>> milder;
    for (const Lexicon& lexicon : options.target_lexicons) {
      for (const LexiconEntry& entry : lexicon.entries()) {
        if (entry.kind != PhenomenonKind::OvertProfanity) continue;
        auto range = target.find_ci(entry.surface);
        if (!range) continue;
        Severity severity = entry.severity.value_or(Severity::Strong);
        if (static_cast<int>(severity) >= static_cast<int>(span_severity))
          same_or_stronger = true;
        else if (!milder)
          milder = range;
      }
    }
    if (!same_or_stronger) {
      verdict.action = VerdictKind::Censor;
      if (milder) {
        verdict.evidence = target.slice(*milder);
        verdict.evidence_range = milder;
      }
      verdict.confidence = Confidence::Heuristic;
      return verdict;
    }
  }

  // (4) Normalise: the canonical form (or its transfer-lexicon rendering)
  // occurs, or the target is fully standard for the shape-like kinds.
  if (decidable && span.canonical && !span.canonical->empty()) {
    if (auto range = target.find_ci(*span.canonical)) {
      verdict.action = VerdictKind::Normalise;
      verdict.evidence = target.slice(*range);
      verdict.evidence_range = range;
      verdict.confidence = Confidence::Rule;
      return verdict;
    }
    if (transfer_lex) {
      for (const std::string& rendering :
           transfer_lex->equivalents(*span.canonical)) {
        if (auto range = target.find_ci(rendering)) {
          verdict.action = VerdictKind::Normalise;
          verdict.evidence = target.slice(*range);
          verdict.evidence_range = range;
          verdict.confidence = Confidence::Rule;
          return verdict;
        }
      }
    }
  }
  if (decidable &&
      (span.kind == PhenomenonKind::AtypicalPunctuation ||
       span.kind == PhenomenonKind::Capitalisation) &&
      detect_kind_in_target(span.kind, translation, target_language, options)
          .empty()) {
    verdict.action = VerdictKind::Normalise;
    verdict.confidence = Confidence::Heuristic;
    return verdict;
  }

  // (5) Omit for droppable kinds, Unknown otherwise.
  if (span.kind == PhenomenonKind::HashtagSubreddit ||
      span.kind == PhenomenonKind::EntityUrlMentionRt ||
      span.kind == PhenomenonKind::EmoticonEmoji) {
    verdict.action = VerdictKind::Omit;
  } else {
    verdict.action = VerdictKind::Unknown;
  }
  verdict.confidence = Confidence::Heuristic;
  return verdict;
}

}  // namespace

ActionVerdict classify_action(const PhenomenonSpan& span, std::string_view /*source*/,
                              std::string_view translation,
                              const TransferLexicon* transfer_lex,
                              std::string_view target_language,
                              const ClassifyOptions& options) {
  if (transfer_lex && !transfer_lex->target_language().empty() &&
      !target_language.empty() &&
      transfer_lex->target_language() != target_language)
    throw LanguageMismatch("transfer lexicon targets " +
                           transfer_lex->target_language() + ", not " +
                           std::string(target_language));

  ActionVerdict verdict =
      classify_impl(span, translation, transfer_lex, target_language, options);
  // Languages that capitalise by grammar (German nouns) make capitalisation
  // judgments unreliable either way.
  if (span.kind == PhenomenonKind::Capitalisation && target_language == "de")
    verdict.confidence = Confidence::Heuristic;
  return verdict;
}

std::size_t ComplianceReport::total() const {
  std::size_t n = 0;
  for (const auto& [kind, tally] : per_kind) n += tally.total;
  return n;
}
std::size_t ComplianceReport::compliant() const {
  std::size_t n = 0;
  for (const auto& [kind, tally] : per_kind) n += tally.compliant;
  return n;
}
std::size_t ComplianceReport::noncompliant() const {
  std::size_t n = 0;
  for (const auto& [kind, tally] : per_kind) n += tally.noncompliant;
  return n;
}
std::size_t ComplianceReport::unknown() const {
  std::size_t n = 0;
  for (const auto& [kind, tally] : per_kind) n += tally.unknown;
  return n;
}

ComplianceReport score_compliance(std::span<const ActionVerdict> verdicts,
                                  const GuidelineSet& guidelines) {
  ComplianceReport report;
  for (const ActionVerdict& verdict : verdicts) {
    KindTally& tally = report.per_kind[verdict.span.kind];
    ++tally.total;
    if (verdict.action == VerdictKind::Unknown) {
      ++tally.unknown;
      continue;
    }
    const ActionKind prescribed = guidelines.action_for(verdict.span.kind);
    bool compliant = verdict.action == to_verdict(prescribed);
    if (!compliant) {
      if (const GuidelineException* exception =
              guidelines.exception_for(verdict.span.kind)) {
        if (exception->expand_unless_unnatural &&
            verdict.action == VerdictKind::Copy && verdict.span.natural_form)
          compliant = true;
        if (exception->translate_if_grammatical_function &&
            verdict.action == VerdictKind::Copy)
          compliant = true;
      }
    }
    if (compliant)
      ++tally.compliant;
    else
      ++tally.noncompliant;
  }
  const std::size_t decided = report.compliant() + report.noncompliant();
  report.overall_rate =
      decided == 0 ? 1.0 : static_cast<double>(report.compliant()) / decided;
  return report;
}

std::vector<ActionVerdict> classify_segment(std::string_view source,
                                            std::string_view translation,
                                            const ClassifySetup& setup) {
  ClassifyOptions options;
  options.source_lexicons = setup.source_lexicons;
  options.target_lexicons = setup.target_lexicons;
  options.min_run = setup.min_run;

  std::vector<ActionVerdict> verdicts;
  for (const PhenomenonSpan& span :
       detect_all(source, setup.source_language, setup.source_lexicons)) {
    verdicts.push_back(classify_action(span, source, translation,
                                       setup.transfer_lex, setup.target_language,
                                       options));
  }
  return verdicts;
}

ComplianceReport compliance_matrix(const ParallelCorpus& corpus, const RunResult& run,
                                   const GuidelineSet& guidelines,
                                   const ClassifySetup& setup) {
  if (corpus.segments.size() != run.outputs.size())
    throw AlignmentError("run has " + std::to_string(run.outputs.size()) +
                         " outputs for " + std::to_string(corpus.segments.size()) +
                         " segments");

  std::vector<ActionVerdict> verdicts;
  for (std::size_t i = 0; i < corpus.segments.size(); ++i) {
    const Segment& segment = corpus.segments[i];
    const SegmentOutput& output = run.outputs[i];
    if (output.segment_id != segment.id)
      throw AlignmentError("output " + output.segment_id +
                           " does not match segment " + segment.id);

    if (output.status == OutputStatus::Ok && output.cleaned) {
      std::vector<ActionVerdict> segment_verdicts =
          classify_segment(segment.source, *output.cleaned, setup);
      verdicts.insert(verdicts.end(),
                      std::make_move_iterator(segment_verdicts.begin()),
                      std::make_move_iterator(segment_verdicts.end()));
    } else {
      // Refused, empty or failed outputs drop everything they contained.
      for (const PhenomenonSpan& span :
           detect_all(segment.source, setup.source_language, setup.source_lexicons)) {
        ActionVerdict verdict;
        verdict.span = span;
        verdict.action = VerdictKind::Omit;
        verdict.confidence = Confidence::Heuristic;
        verdicts.push_back(std::move(verdict));
      }
    }
  }
  return score_compliance(verdicts, guidelines);
}

}  // namespace ugceval
