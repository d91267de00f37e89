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

#ifndef UGCEVAL_TESTS_SUPPORT_ENTITY_ORACLE_HPP_
#define UGCEVAL_TESTS_SUPPORT_ENTITY_ORACLE_HPP_

#include <string_view>
#include <vector>

#include "ugceval/phenomena.hpp"
#include "ugceval/unicode.hpp"

namespace testutil {

// Independent entity scan: for every position, try to match each entity
// type directly, honoring the URL-first masking rule.
inline ugceval::EntityCounts oracle_entities(std::string_view text) {
  namespace uni = ugceval::uni;
  std::u32string t = uni::decode(text);
  std::vector<bool> used(t.size(), false);
  ugceval::EntityCounts counts;
  auto word = [&](std::size_t i) { return i < t.size() && uni::is_word_char(t[i]); };

  auto lower_at = [&](std::size_t i, std::u32string_view pattern) {
    if (i + pattern.size() > t.size()) return false;
    for (std::size_t k = 0; k < pattern.size(); ++k)
      if (uni::to_lower(t[i + k]) != pattern[k]) return false;
    return true;
  };

  for (std::size_t i = 0; i < t.size();) {
    bool boundary = i == 0 || !uni::is_word_char(t[i - 1]);
    std::size_t after_scheme = 0;
    if (boundary && lower_at(i, U"http://")) after_scheme = i + 7;
    else if (boundary && lower_at(i, U"https://")) after_scheme = i + 8;
    else if (boundary && lower_at(i, U"www.")) after_scheme = i + 4;
    if (after_scheme != 0 && after_scheme < t.size() &&
        !uni::is_space(t[after_scheme])) {
      std::size_t j = after_scheme;
      while (j < t.size() && !uni::is_space(t[j])) ++j;
      for (std::size_t k = i; k < j; ++k) used[k] = true;
      ++counts.urls;
      i = j;
    } else {
      ++i;
    }
  }
  for (std::size_t i = 0; i + 2 <= t.size(); ++i) {
    if (t[i] == U'R' && t[i + 1] == U'T' && !used[i] && !used[i + 1] &&
        (i == 0 || !word(i - 1)) && !word(i + 2))
      ++counts.retweet_marks;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == U'@' && !used[i] && (i == 0 || !word(i - 1)) && word(i + 1) &&
        !used[i + 1]) {
      ++counts.mentions;
      while (i + 1 < t.size() && word(i + 1) && !used[i + 1]) ++i;
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == U'#' && !used[i] && (i == 0 || !word(i - 1)) && word(i + 1) &&
        !used[i + 1]) {
      ++counts.hashtags;
      while (i + 1 < t.size() && word(i + 1) && !used[i + 1]) ++i;
    }
  }
  return counts;
}

}  // namespace testutil

#endif  // UGCEVAL_TESTS_SUPPORT_ENTITY_ORACLE_HPP_
