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

#ifndef UGCEVAL_PHENOMENA_HPP_
#define UGCEVAL_PHENOMENA_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ugceval/types.hpp"

namespace ugceval {

// A detected non-standard phenomenon. Offsets are Unicode scalar offsets
// into the source line, half-open; `surface` always equals the source
// sliced at [begin, end). Zero-length spans mark structural findings
// (missing sentence-initial capital, missing terminal punctuation).
struct PhenomenonSpan {
  PhenomenonKind kind;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string surface;
  std::optional<std::string> canonical;
  // Set for acronym spans whose lexicon entry is flagged `natural`
  // (abbreviated form is the usual one, e.g. "LOL").
  bool natural_form = false;
};

enum class Severity { Mild, Strong };

struct LexiconEntry {
  std::string surface;
  std::string canonical;
  PhenomenonKind kind;
  std::optional<Severity> severity;
  bool natural = false;
  bool case_sensitive = false;
};

// A surface-form lexicon backing the lexical detectors. Lookup is
// case-insensitive unless an entry is flagged case_sensitive. Entry kinds
// are restricted to InformalAbbreviation, InformalAcronym, OvertProfanity
// plus Spelling/Grammar for explicitly listed misspellings.
class Lexicon {
 public:
  Lexicon(std::string name, std::string language,
          std::vector<LexiconEntry> entries);

  // TSV: surface<TAB>canonical<TAB>kind<TAB>attributes, attributes being a
  // comma-separated subset of {mild, strong, natural, case_sensitive}.
  // An optional `#lexicon name=... lang=...` directive line names the file.
  static Lexicon load(const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  const std::string& language() const { return language_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }

  // Whole-string lookup honoring per-entry case rules; nullptr if absent.
  const LexiconEntry* find(std::string_view surface) const;

 private:
  std::string name_;
  std::string language_;
  std::vector<LexiconEntry> entries_;
};

// Set of known words used when collapsing letter repetitions.
class Wordlist {
 public:
  Wordlist() = default;
  explicit Wordlist(std::vector<std::string> words);
  static Wordlist load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;  // case-insensitive
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

struct EntityCounts {
  std::size_t urls = 0;
  std::size_t mentions = 0;
  std::size_t hashtags = 0;
  std::size_t retweet_marks = 0;
};

inline constexpr int kDefaultMinRun = 3;

// Runs every detector over one line with the fixed kind-precedence order
// (entities > hashtags > emoticons > self-censored > overt profanity >
// acronyms > abbreviations > spelling/grammar > elongation > capitalisation
// > punctuation); characters claimed by a higher kind are invisible to
// lower kinds. Spans come back sorted by start offset. Grammar and
// Spelling appear only for explicit lexicon entries.
std::vector<PhenomenonSpan> detect_all(std::string_view text,
                                       std::string_view language,
                                       std::span<const Lexicon> lexicons);

// Counts social-media entities with simple scans; a hashtag or mention
// inside a URL counts only as the URL.
EntityCounts detect_entities(std::string_view text);

// One span per word containing a run of >= min_run identical letters.
// Runs collapse to doubled letters when the resulting word is in the
// wordlist, else to single letters ("niceeee" -> "nice", "cooool" ->
// "cool"). Throws InvalidThreshold for min_run < 2.
std::vector<PhenomenonSpan> detect_elongation(std::string_view text, int min_run,
                                              const Wordlist& wordlist);

// All-caps tokens (length >= 2, unless listed as an acronym), case-swapped
// tokens, and a zero-length span at the first letter when it should open
// the sentence with a capital.
std::vector<PhenomenonSpan> detect_capitalisation(
    std::string_view text, std::string_view language,
    std::span<const Lexicon> lexicons = {});

// Runs of repeated or mixed terminal punctuation, and a zero-length
// missing-terminal span at the trimmed end of sentence-like lines (at
// least two tokens, last character a letter or digit).
std::vector<PhenomenonSpan> detect_punctuation(std::string_view text,
                                               std::string_view language);

// Unicode emoji runs (pinned scalar-range table, see emoji_table_version())
// and ASCII emoticons from a built-in pattern table.
std::vector<PhenomenonSpan> detect_emoticons(std::string_view text);

std::string_view emoji_table_version();

// Starter lexicons / wordlists shipped under the data directory, keyed by
// language code; loaded once and cached. Unknown languages yield empties.
std::span<const Lexicon> builtin_lexicons(std::string_view language);
const Wordlist& builtin_wordlist(std::string_view language);

}  // namespace ugceval

#endif  // UGCEVAL_PHENOMENA_HPP_
