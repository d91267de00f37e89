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

#include "ugceval/types.hpp"

#include <algorithm>
#include <cctype>

namespace ugceval {

std::string_view snake_name(PhenomenonKind k) {
  switch (k) {
    case PhenomenonKind::Grammar: return "grammar";
    case PhenomenonKind::Spelling: return "spelling";
    case PhenomenonKind::WordElongation: return "word_elongation";
    case PhenomenonKind::Capitalisation: return "capitalisation";
    case PhenomenonKind::InformalAbbreviation: return "informal_abbreviation";
    case PhenomenonKind::InformalAcronym: return "informal_acronym";
    case PhenomenonKind::HashtagSubreddit: return "hashtag_subreddit";
    case PhenomenonKind::EntityUrlMentionRt: return "entity_url_mention_rt";
    case PhenomenonKind::EmoticonEmoji: return "emoticon_emoji";
    case PhenomenonKind::AtypicalPunctuation: return "atypical_punctuation";
    case PhenomenonKind::OvertProfanity: return "overt_profanity";
    case PhenomenonKind::SelfCensoredProfanity: return "self_censored_profanity";
  }
  return "";
}

std::string_view display_name(PhenomenonKind k) {
  switch (k) {
    case PhenomenonKind::Grammar: return "Grammar";
    case PhenomenonKind::Spelling: return "Spelling";
    case PhenomenonKind::WordElongation: return "Word elongation";
    case PhenomenonKind::Capitalisation: return "Capitalisation";
    case PhenomenonKind::InformalAbbreviation: return "Informal abbreviations";
    case PhenomenonKind::InformalAcronym: return "Informal acronyms";
    case PhenomenonKind::HashtagSubreddit: return "Hashtags and subreddits";
    case PhenomenonKind::EntityUrlMentionRt:
      return "URLs, user IDs, and retweet marks (RT)";
    case PhenomenonKind::EmoticonEmoji: return "Emoticons and emojis";
    case PhenomenonKind::AtypicalPunctuation: return "Atypical punctuation";
    case PhenomenonKind::OvertProfanity: return "Overt profanity";
    case PhenomenonKind::SelfCensoredProfanity: return "Self-censored profanity";
  }
  return "";
}

std::optional<PhenomenonKind> phenomenon_from_snake(std::string_view token) {
  for (PhenomenonKind k : all_phenomena()) {
    if (snake_name(k) == token) return k;
  }
  return std::nullopt;
}

std::string_view action_name(ActionKind a) {
  switch (a) {
    case ActionKind::Normalise: return "Normalise";
    case ActionKind::Copy: return "Copy";
    case ActionKind::Transfer: return "Transfer";
    case ActionKind::Omit: return "Omit";
    case ActionKind::Censor: return "Censor";
  }
  return "";
}

std::string_view verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::Normalise: return "Normalise";
    case VerdictKind::Copy: return "Copy";
    case VerdictKind::Transfer: return "Transfer";
    case VerdictKind::Omit: return "Omit";
    case VerdictKind::Censor: return "Censor";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "";
}

std::optional<ActionKind> action_from_name(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "normalise" || lower == "normalize") return ActionKind::Normalise;
  if (lower == "copy") return ActionKind::Copy;
  if (lower == "transfer") return ActionKind::Transfer;
  if (lower == "omit") return ActionKind::Omit;
  if (lower == "censor") return ActionKind::Censor;
  return std::nullopt;
}

}  // namespace ugceval
