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

#ifndef UGCEVAL_UNICODE_HPP_
#define UGCEVAL_UNICODE_HPP_

#include <string>
#include <string_view>

namespace ugceval::uni {

// Decodes UTF-8 into a scalar sequence. Invalid byte sequences become
// U+FFFD (one replacement per bogus byte), so offsets stay monotonic.
std::u32string decode(std::string_view utf8);
bool is_valid_utf8(std::string_view utf8);

std::string encode(std::u32string_view scalars);
std::string encode(char32_t cp);

// Character classes. Letter coverage spans ASCII, Latin-1 Supplement,
// Latin Extended-A/B, Greek and Cyrillic, which is what the supported
// UGC languages need; everything else is treated as a non-letter.
bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_word_char(char32_t cp);  // letter, digit or underscore

// Whitespace per the Python str.split() set (includes NBSP, ideographic
// space, line/paragraph separators); the 13a tokenizer depends on it.
bool is_space(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);

// Lowercases a UTF-8 string using the simplified mapping above.
std::string fold_case(std::string_view utf8);

}  // namespace ugceval::uni

#endif  // UGCEVAL_UNICODE_HPP_
