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

#include "ugceval/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "ugceval/errors.hpp"
#include "ugceval/unicode.hpp"

namespace ugceval {

namespace {

using nlohmann::json;

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::string chomp_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void check_single_line(const std::string& text, std::size_t line_no) {
  if (text.find('\n') != std::string::npos)
    throw MalformedRecord(line_no, "embedded newline in field");
}

void add_segment(ParallelCorpus& corpus, Segment segment,
                 std::unordered_set<std::string>& seen, std::size_t line_no) {
  if (segment.id.empty())
    throw MalformedRecord(line_no, "empty segment id");
  if (!seen.insert(segment.id).second) throw DuplicateId(segment.id);
  if (blank(segment.source)) throw EmptySource(segment.id);
  if (segment.references.empty())
    throw MalformedRecord(line_no, "segment has no references");
  corpus.segments.push_back(std::move(segment));
}

ParallelCorpus load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path.string());

  ParallelCorpus corpus;
  corpus.name = path.stem().string();
  std::unordered_set<std::string> seen;

  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = chomp_cr(line);
    if (!uni::is_valid_utf8(line)) throw EncodingError(line_no);
    if (!have_header) {
      if (line != "id\tsource\tnormalized\treference")
        throw MalformedRecord(line_no, "bad TSV header: " + line);
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw MalformedRecord(line_no, "expected 4 tab-separated fields, got " +
                                         std::to_string(fields.size()));
    Segment segment;
    segment.id = fields[0];
    segment.source = fields[1];
    if (!fields[2].empty()) segment.normalized = fields[2];
    segment.references.push_back(fields[3]);
    add_segment(corpus, std::move(segment), seen, line_no);
  }
  if (!have_header) throw MalformedRecord(1, "missing TSV header");
  return corpus;
}

ParallelCorpus load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path.string());

  ParallelCorpus corpus;
  corpus.name = path.stem().string();
  std::unordered_set<std::string> seen;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = chomp_cr(line);
    if (blank(line)) continue;
    if (!uni::is_valid_utf8(line)) throw EncodingError(line_no);

    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      throw MalformedRecord(line_no, "invalid JSON object");

    Segment segment;
    if (!record.contains("id") || !record["id"].is_string())
      throw MalformedRecord(line_no, "missing string field 'id'");
    segment.id = record["id"].get<std::string>();
    if (!record.contains("source") || !record["source"].is_string())
      throw MalformedRecord(line_no, "missing string field 'source'");
    segment.source = record["source"].get<std::string>();
    check_single_line(segment.source, line_no);
    if (record.contains("normalized")) {
      if (!record["normalized"].is_string())
        throw MalformedRecord(line_no, "'normalized' must be a string");
      segment.normalized = record["normalized"].get<std::string>();
      check_single_line(*segment.normalized, line_no);
    }
    if (!record.contains("references") || !record["references"].is_array())
      throw MalformedRecord(line_no, "missing array field 'references'");
    for (const auto& ref : record["references"]) {
      if (!ref.is_string())
        throw MalformedRecord(line_no, "'references' must hold strings");
      segment.references.push_back(ref.get<std::string>());
      check_single_line(segment.references.back(), line_no);
    }
    if (record.contains("tags")) {
      if (!record["tags"].is_object())
        throw MalformedRecord(line_no, "'tags' must be an object");
      for (const auto& [key, value] : record["tags"].items()) {
        if (!value.is_string())
          throw MalformedRecord(line_no, "'tags' values must be strings");
        segment.tags[key] = value.get<std::string>();
      }
    }
    add_segment(corpus, std::move(segment), seen, line_no);
  }
  return corpus;
}

void require_tsv_safe(const std::string& field) {
  if (field.find('\t') != std::string::npos ||
      field.find('\n') != std::string::npos)
    throw Error("field contains tab or newline, not representable in TSV");
}

}  // namespace

ParallelCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  return format == CorpusFormat::Tsv ? load_tsv(path) : load_jsonl(path);
}

void save_corpus(const ParallelCorpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file: " + path.string());

  if (format == CorpusFormat::Tsv) {
    out << "id\tsource\tnormalized\treference\n";
    for (const Segment& segment : corpus.segments) {
      if (segment.references.size() != 1)
        throw Error("TSV corpus requires exactly one reference per segment");
      if (!segment.tags.empty())
        throw Error("TSV corpus cannot carry segment tags");
      const std::string& normalized =
          segment.normalized ? *segment.normalized : std::string();
      for (const std::string* field :
           {&segment.id, &segment.source, &normalized, &segment.references[0]})
        require_tsv_safe(*field);
      out << segment.id << '\t' << segment.source << '\t' << normalized << '\t'
          << segment.references[0] << '\n';
    }
    return;
  }

  for (const Segment& segment : corpus.segments) {
    json record;
    record["id"] = segment.id;
    record["source"] = segment.source;
    if (segment.normalized) record["normalized"] = *segment.normalized;
    record["references"] = segment.references;
    if (!segment.tags.empty()) record["tags"] = segment.tags;
    out << record.dump() << '\n';
  }
}

GuidelineSet::GuidelineSet(std::string name, std::string source_language,
                           std::string target_language,
                           std::map<PhenomenonKind, ActionKind> actions,
                           std::map<PhenomenonKind, GuidelineException> exceptions)
    : name_(std::move(name)),
      source_language_(std::move(source_language)),
      target_language_(std::move(target_language)),
      actions_(std::move(actions)),
      exceptions_(std::move(exceptions)) {
  for (PhenomenonKind kind : all_phenomena()) {
    auto it = actions_.find(kind);
    if (it == actions_.end()) throw MissingKind(kind);
    if (it->second != ActionKind::Normalise && it->second != ActionKind::Copy &&
        it->second != ActionKind::Transfer)
      throw IllegalPrescribedAction(kind, it->second);
  }
}

ActionKind GuidelineSet::action_for(PhenomenonKind k) const {
  return actions_.at(k);
}

const GuidelineException* GuidelineSet::exception_for(PhenomenonKind k) const {
  auto it = exceptions_.find(k);
  return it == exceptions_.end() ? nullptr : &it->second;
}

namespace {

using K = PhenomenonKind;
using A = ActionKind;

const GuidelineException kExpandUnlessUnnatural{
    "Acronyms are expanded (e.g., TBH -> to be honest) unless doing so would "
    "sound unnatural (e.g., LOL is, in practice, more used in its abbreviated "
    "form than in its full form laughing out loud).",
    /*expand_unless_unnatural=*/true,
    /*translate_if_grammatical_function=*/false};

const GuidelineException kGrammaticalFunctionHashtags{
    "Hashtags are translated only if they have a grammatical function in the "
    "sentence (e.g. #ItAnnoysMeWhen people don't listen when I'm talking.).",
    /*expand_unless_unnatural=*/false,
    /*translate_if_grammatical_function=*/true};

std::map<K, A> table_column(A elongation, A capitalisation, A abbreviations,
                            A acronyms, A hashtags, A punctuation,
                            A self_censored) {
  return {
      {K::Grammar, A::Normalise},
      {K::Spelling, A::Normalise},
      {K::WordElongation, elongation},
      {K::Capitalisation, capitalisation},
      {K::InformalAbbreviation, abbreviations},
      {K::InformalAcronym, acronyms},
      {K::HashtagSubreddit, hashtags},
      {K::EntityUrlMentionRt, A::Copy},
      {K::EmoticonEmoji, A::Copy},
      {K::AtypicalPunctuation, punctuation},
      {K::OvertProfanity, A::Transfer},
      {K::SelfCensoredProfanity, self_censored},
  };
}

const GuidelineSet kRocsMt(
    "rocs-mt", "en", "fr",
    table_column(A::Normalise, A::Normalise, A::Normalise, A::Normalise,
                 A::Copy, A::Normalise, A::Normalise),
    {{K::InformalAcronym, kExpandUnlessUnnatural}});

const GuidelineSet kFooTweets(
    "footweets", "en", "de",
    table_column(A::Transfer, A::Transfer, A::Normalise, A::Normalise, A::Copy,
                 A::Copy, A::Normalise),
    {{K::InformalAcronym, kExpandUnlessUnnatural}});

const GuidelineSet kMmtc(
    "mmtc", "fr", "en",
    table_column(A::Transfer, A::Transfer, A::Normalise, A::Transfer,
                 A::Transfer, A::Copy, A::Normalise),
    {});

const GuidelineSet kPfsmb(
    "pfsmb", "fr", "en",
    table_column(A::Transfer, A::Transfer, A::Transfer, A::Transfer,
                 A::Transfer, A::Copy, A::Transfer),
    {{K::HashtagSubreddit, kGrammaticalFunctionHashtags}});

}  // namespace

const GuidelineSet& builtin_guidelines(std::string_view name) {
  if (name == "rocs-mt") return kRocsMt;
  if (name == "footweets") return kFooTweets;
  if (name == "mmtc") return kMmtc;
  if (name == "pfsmb") return kPfsmb;
  throw UnknownGuidelineSet(std::string(name));
}

const std::vector<std::string>& builtin_guideline_names() {
  static const std::vector<std::string> names = {"rocs-mt", "footweets", "mmtc",
                                                 "pfsmb"};
  return names;
}

GuidelineSet load_guidelines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open guideline file: " + path.string());

  std::map<PhenomenonKind, ActionKind> actions;
  std::map<PhenomenonKind, GuidelineException> exceptions;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = chomp_cr(line);
    std::string_view view = line;
    if (blank(view) || view.front() == '#') continue;

    std::string note;
    if (std::size_t hash = view.find('#'); hash != std::string_view::npos) {
      note = std::string(view.substr(hash + 1));
      view = view.substr(0, hash);
      while (!note.empty() && note.front() == ' ') note.erase(note.begin());
      while (!note.empty() && note.back() == ' ') note.pop_back();
    }

    std::size_t eq = view.find('=');
    if (eq == std::string_view::npos)
      throw MalformedRecord(line_no, "expected 'kind = action'");
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    std::string_view kind_token = trim(view.substr(0, eq));
    std::string_view action_token = trim(view.substr(eq + 1));

    auto kind = phenomenon_from_snake(kind_token);
    if (!kind) throw UnknownKind(std::string(kind_token));
    auto action = action_from_name(action_token);
    if (!action)
      throw MalformedRecord(line_no, "unknown action: " + std::string(action_token));
    if (*action != ActionKind::Normalise && *action != ActionKind::Copy &&
        *action != ActionKind::Transfer)
      throw IllegalPrescribedAction(*kind, *action);
    if (actions.count(*kind))
      throw MalformedRecord(line_no,
                            "duplicate kind: " + std::string(kind_token));
    actions[*kind] = *action;
    if (!note.empty()) {
      GuidelineException exception;
      exception.note = note;
      exception.expand_unless_unnatural =
          note.find("expand_unless_unnatural") != std::string::npos;
      exception.translate_if_grammatical_function =
          note.find("translate_if_grammatical_function") != std::string::npos;
      exceptions[*kind] = std::move(exception);
    }
  }

  // Constructor enforces totality and legal prescriptions.
  return GuidelineSet(path.stem().string(), "", "", std::move(actions),
                      std::move(exceptions));
}

std::vector<GuidelineDiff> diff_guidelines(const GuidelineSet& a,
                                           const GuidelineSet& b) {
  std::vector<GuidelineDiff> diff;
  for (PhenomenonKind kind : all_phenomena()) {
    ActionKind action_a = a.action_for(kind);
    ActionKind action_b = b.action_for(kind);
    if (action_a != action_b) diff.push_back({kind, action_a, action_b});
  }
  return diff;
}

}  // namespace ugceval
