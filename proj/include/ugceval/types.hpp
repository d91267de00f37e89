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

#ifndef UGCEVAL_TYPES_HPP_
#define UGCEVAL_TYPES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ugceval {

// The twelve non-standard phenomena tracked by this toolkit. The numeric
// value is the canonical 1-based row index used everywhere (tables, files).
enum class PhenomenonKind : int {
  Grammar = 1,
  Spelling = 2,
  WordElongation = 3,
  Capitalisation = 4,
  InformalAbbreviation = 5,
  InformalAcronym = 6,
  HashtagSubreddit = 7,
  EntityUrlMentionRt = 8,
  EmoticonEmoji = 9,
  AtypicalPunctuation = 10,
  OvertProfanity = 11,
  SelfCensoredProfanity = 12,
};

inline constexpr int kPhenomenonCount = 12;

constexpr std::array<PhenomenonKind, kPhenomenonCount> all_phenomena() {
  return {PhenomenonKind::Grammar,
          PhenomenonKind::Spelling,
          PhenomenonKind::WordElongation,
          PhenomenonKind::Capitalisation,
          PhenomenonKind::InformalAbbreviation,
          PhenomenonKind::InformalAcronym,
          PhenomenonKind::HashtagSubreddit,
          PhenomenonKind::EntityUrlMentionRt,
          PhenomenonKind::EmoticonEmoji,
          PhenomenonKind::AtypicalPunctuation,
          PhenomenonKind::OvertProfanity,
          PhenomenonKind::SelfCensoredProfanity};
}

constexpr int index_of(PhenomenonKind k) { return static_cast<int>(k); }

// snake_case identifiers used in guideline and lexicon files.
std::string_view snake_name(PhenomenonKind k);
// Human-readable row labels used in rendered tables.
std::string_view display_name(PhenomenonKind k);
std::optional<PhenomenonKind> phenomenon_from_snake(std::string_view token);

// How a translation handles a phenomenon. Guideline sets may only prescribe
// the first three; Omit and Censor occur as observed verdicts.
enum class ActionKind {
  Normalise,
  Copy,
  Transfer,
  Omit,
  Censor,
};

// Observed classification outcome: the five actions plus Unknown for spans
// that cannot be decided (grammar/spelling without evidence, etc.).
enum class VerdictKind {
  Normalise,
  Copy,
  Transfer,
  Omit,
  Censor,
  Unknown,
};

std::string_view action_name(ActionKind a);
std::string_view verdict_name(VerdictKind v);
// Accepts both -ise and -ize spellings, case-insensitively.
std::optional<ActionKind> action_from_name(std::string_view token);

constexpr VerdictKind to_verdict(ActionKind a) {
  switch (a) {
    case ActionKind::Normalise: return VerdictKind::Normalise;
    case ActionKind::Copy: return VerdictKind::Copy;
    case ActionKind::Transfer: return VerdictKind::Transfer;
    case ActionKind::Omit: return VerdictKind::Omit;
    case ActionKind::Censor: return VerdictKind::Censor;
  }
  return VerdictKind::Unknown;
}

}  // namespace ugceval

#endif  // UGCEVAL_TYPES_HPP_
