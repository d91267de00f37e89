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

#ifndef UGCEVAL_CORPUS_HPP_
#define UGCEVAL_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ugceval/types.hpp"

namespace ugceval {

// One parallel unit: a source line with at least one reference translation.
struct Segment {
  std::string id;
  std::string source;
  std::optional<std::string> normalized;
  std::vector<std::string> references;
  std::map<std::string, std::string> tags;
};

struct ParallelCorpus {
  std::string name;
  std::string source_language;  // language codes, e.g. "en"
  std::string target_language;
  std::vector<Segment> segments;
  std::optional<std::string> default_guidelines;
};

// Machine-readable footnote flags carried next to the free-text note.
struct GuidelineException {
  std::string note;
  bool expand_unless_unnatural = false;
  bool translate_if_grammatical_function = false;
};

// A total prescription of one action per phenomenon kind. Construction
// enforces totality over the 12 kinds and restricts prescriptions to
// Normalise/Copy/Transfer; instances are immutable afterwards and safe to
// share across threads.
class GuidelineSet {
 public:
  GuidelineSet(std::string name, std::string source_language,
               std::string target_language,
               std::map<PhenomenonKind, ActionKind> actions,
               std::map<PhenomenonKind, GuidelineException> exceptions = {});

  const std::string& name() const { return name_; }
  const std::string& source_language() const { return source_language_; }
  const std::string& target_language() const { return target_language_; }
  ActionKind action_for(PhenomenonKind k) const;
  const GuidelineException* exception_for(PhenomenonKind k) const;
  const std::map<PhenomenonKind, ActionKind>& actions() const { return actions_; }
  const std::map<PhenomenonKind, GuidelineException>& exceptions() const {
    return exceptions_;
  }

 private:
  std::string name_;
  std::string source_language_;
  std::string target_language_;
  std::map<PhenomenonKind, ActionKind> actions_;
  std::map<PhenomenonKind, GuidelineException> exceptions_;
};

enum class CorpusFormat { Tsv, Jsonl };

// Loads a corpus file.
//
// TSV: header `id<TAB>source<TAB>normalized<TAB>reference`, UTF-8, LF line
// endings, empty `normalized` allowed, literal tabs inside fields forbidden.
// JSONL: one object per line with `id`, `source`, optional `normalized`,
// `references` (non-empty array), optional `tags` (string-valued object).
//
// Throws MalformedRecord, DuplicateId, EmptySource, EncodingError.
ParallelCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

// Inverse of load_corpus for the same format. TSV cannot represent multiple
// references or tags; attempting to do so throws Error.
void save_corpus(const ParallelCorpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format);

// The four built-in guideline sets: "rocs-mt", "footweets", "mmtc", "pfsmb".
// Throws UnknownGuidelineSet for anything else.
const GuidelineSet& builtin_guidelines(std::string_view name);
const std::vector<std::string>& builtin_guideline_names();

// Parses a line-oriented `kind = action` file with optional `# note`
// suffixes. Notes containing `expand_unless_unnatural` or
// `translate_if_grammatical_function` set the matching exception flag.
// Throws MissingKind, UnknownKind, IllegalPrescribedAction.
GuidelineSet load_guidelines(const std::filesystem::path& path);

struct GuidelineDiff {
  PhenomenonKind kind;
  ActionKind a;
  ActionKind b;
};

// Kinds on which two sets prescribe different actions, in kind order.
std::vector<GuidelineDiff> diff_guidelines(const GuidelineSet& a,
                                           const GuidelineSet& b);

}  // namespace ugceval

#endif  // UGCEVAL_CORPUS_HPP_
