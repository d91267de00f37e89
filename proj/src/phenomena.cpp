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

#include "ugceval/phenomena.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "ugceval/data_paths.hpp"
#include "ugceval/errors.hpp"
#include "ugceval/unicode.hpp"

namespace ugceval {

namespace {

using uni::is_ascii_digit;
using uni::is_letter;
using uni::is_space;
using uni::is_word_char;

// ---------------------------------------------------------------------------
// Emoji scalar ranges, pinned so detection does not depend on host Unicode
// data. Subset of Unicode 15 emoji blocks that covers social-media usage.
// ---------------------------------------------------------------------------

constexpr std::string_view kEmojiTableVersion = "ugceval-emoji-1 (Unicode 15 subset)";

struct ScalarRange {
  char32_t lo, hi;
};

constexpr ScalarRange kEmojiRanges[] = {
    {0x231A, 0x231B}, {0x23E9, 0x23F3}, {0x23F8, 0x23FA}, {0x25AA, 0x25AB},
    {0x25B6, 0x25B6}, {0x25C0, 0x25C0}, {0x25FB, 0x25FE}, {0x2600, 0x27BF},
    {0x2934, 0x2935}, {0x2B05, 0x2B07}, {0x2B1B, 0x2B1C}, {0x2B50, 0x2B50},
    {0x2B55, 0x2B55}, {0x3030, 0x3030}, {0x303D, 0x303D}, {0x3297, 0x3297},
    {0x3299, 0x3299}, {0x1F004, 0x1F004}, {0x1F0CF, 0x1F0CF},
    {0x1F170, 0x1F171}, {0x1F17E, 0x1F17F}, {0x1F18E, 0x1F18E},
    {0x1F191, 0x1F19A}, {0x1F1E6, 0x1F1FF}, {0x1F201, 0x1F202},
    {0x1F21A, 0x1F21A}, {0x1F22F, 0x1F22F}, {0x1F232, 0x1F23A},
    {0x1F250, 0x1F251}, {0x1F300, 0x1F5FF}, {0x1F600, 0x1F64F},
    {0x1F680, 0x1F6FF}, {0x1F7E0, 0x1F7EB}, {0x1F900, 0x1F9FF},
    {0x1FA70, 0x1FAFF},
};

bool is_emoji_scalar(char32_t cp) {
  for (const ScalarRange& r : kEmojiRanges) {
    if (cp >= r.lo && cp <= r.hi) return true;
  }
  return false;
}

// ZWJ, variation selector-16 and the keycap combiner glue emoji sequences.
bool is_emoji_extender(char32_t cp) {
  return cp == 0x200D || cp == 0xFE0F || cp == 0x20E3;
}

// ---------------------------------------------------------------------------
// Detection context: one decoded line plus the claimed-character mask that
// implements kind precedence.
// ---------------------------------------------------------------------------

struct Line {
  std::u32string t;
  std::vector<bool> claimed;

  explicit Line(std::string_view utf8) : t(uni::decode(utf8)), claimed(t.size(), false) {}

  std::size_t size() const { return t.size(); }
  bool free_range(std::size_t a, std::size_t b) const {
    for (std::size_t i = a; i < b; ++i)
      if (claimed[i]) return false;
    return true;
  }
  void claim(std::size_t a, std::size_t b) {
    for (std::size_t i = a; i < b; ++i) claimed[i] = true;
  }
  std::string slice(std::size_t a, std::size_t b) const {
    return uni::encode(std::u32string_view(t).substr(a, b - a));
  }
};

PhenomenonSpan make_span(const Line& line, PhenomenonKind kind, std::size_t a,
                         std::size_t b,
                         std::optional<std::string> canonical = std::nullopt) {
  PhenomenonSpan span;
  span.kind = kind;
  span.begin = a;
  span.end = b;
  span.surface = line.slice(a, b);
  span.canonical = std::move(canonical);
  return span;
}

bool match_ci(const std::u32string& t, std::size_t i, std::u32string_view pat) {
  if (i + pat.size() > t.size()) return false;
  for (std::size_t k = 0; k < pat.size(); ++k)
    if (uni::to_lower(t[i + k]) != pat[k]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Entity scans (URLs, retweet marks, @-mentions, hashtags, subreddits)
// ---------------------------------------------------------------------------

template <typename Emit>
void scan_urls(Line& line, Emit emit) {
  const std::u32string& t = line.t;
  std::size_t i = 0;
  while (i < t.size()) {
    bool at_boundary = i == 0 || !is_word_char(t[i - 1]);
    std::size_t body = 0;
    if (at_boundary && match_ci(t, i, U"http://")) body = i + 7;
    else if (at_boundary && match_ci(t, i, U"https://")) body = i + 8;
    else if (at_boundary && match_ci(t, i, U"www.")) body = i + 4;
    if (body == 0 || body >= t.size() || is_space(t[body]) || !line.free_range(i, body)) {
      ++i;
      continue;
    }
    std::size_t j = body;
    while (j < t.size() && !is_space(t[j]) && !line.claimed[j]) ++j;
    emit(i, j);
    line.claim(i, j);
    i = j;
  }
}

template <typename Emit>
void scan_retweet_marks(Line& line, Emit emit) {
  const std::u32string& t = line.t;
  for (std::size_t i = 0; i + 2 <= t.size(); ++i) {
    if (t[i] != U'R' || t[i + 1] != U'T') continue;
    if (i > 0 && is_word_char(t[i - 1])) continue;
    if (i + 2 < t.size() && is_word_char(t[i + 2])) continue;
    if (!line.free_range(i, i + 2)) continue;
    emit(i, i + 2);
    line.claim(i, i + 2);
  }
}

template <typename Emit>
void scan_mentions(Line& line, Emit emit) {
  const std::u32string& t = line.t;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != U'@' || (i > 0 && is_word_char(t[i - 1])) || line.claimed[i]) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < t.size() && is_word_char(t[j]) && !line.claimed[j]) ++j;
    if (j > i + 1) {
      emit(i, j);
      line.claim(i, j);
      i = j;
    } else {
      ++i;
    }
  }
}

template <typename Emit>
void scan_hashtags(Line& line, Emit emit) {
  const std::u32string& t = line.t;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != U'#' || (i > 0 && is_word_char(t[i - 1])) || line.claimed[i]) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < t.size() && is_word_char(t[j]) && !line.claimed[j]) ++j;
    if (j > i + 1) {
      emit(i, j);
      line.claim(i, j);
      i = j;
    } else {
      ++i;
    }
  }
}

template <typename Emit>
void scan_subreddits(Line& line, Emit emit) {
  const std::u32string& t = line.t;
  std::size_t i = 0;
  while (i + 2 < t.size()) {
    if (t[i] == U'r' && t[i + 1] == U'/' && is_word_char(t[i + 2]) &&
        (i == 0 || !is_word_char(t[i - 1])) && line.free_range(i, i + 3)) {
      std::size_t j = i + 2;
      while (j < t.size() && is_word_char(t[j]) && !line.claimed[j]) ++j;
      emit(i, j);
      line.claim(i, j);
      i = j;
    } else {
      ++i;
    }
  }
}

// ---------------------------------------------------------------------------
// Emoticons and emoji
// ---------------------------------------------------------------------------

bool left_token_boundary(const std::u32string& t, std::size_t i) {
  return i == 0 || (!is_letter(t[i - 1]) && !is_ascii_digit(t[i - 1]));
}

bool right_token_boundary(const std::u32string& t, std::size_t j) {
  return j >= t.size() || (!is_letter(t[j]) && !is_ascii_digit(t[j]));
}

// Tries to match one ASCII emoticon starting at i; returns end offset or 0.
std::size_t match_ascii_emoticon(const std::u32string& t, std::size_t i) {
  if (!left_token_boundary(t, i)) return 0;
  const std::size_t n = t.size();

  auto run_end = [&](std::size_t start, char32_t c) {
    std::size_t j = start;
    while (j < n && t[j] == c) ++j;
    return j;
  };

  // Fixed faces and hearts; "<3"/"</3" allow a repeated final 3.
  static const std::u32string kFaces[] = {U"^_^", U"-_-", U"T_T", U"t_t",
                                          U"o.O", U"O.o"};
  for (const std::u32string& face : kFaces) {
    if (t.compare(i, face.size(), face) == 0 &&
        right_token_boundary(t, i + face.size()))
      return i + face.size();
  }
  if (t[i] == U'<') {
    std::size_t k = i + 1;
    if (k < n && t[k] == U'/') ++k;
    if (k < n && t[k] == U'3') {
      std::size_t j = run_end(k, U'3');
      if (right_token_boundary(t, j)) return j;
    }
  }
  if (t[i] == U'^') {
    std::size_t j = run_end(i, U'^');
    if (j - i >= 2 && right_token_boundary(t, j)) return j;
  }

  auto is_eyes = [](char32_t c) {
    return c == U':' || c == U';' || c == U'=' || c == U'8' || c == U'x' ||
           c == U'X';
  };
  auto is_nose = [](char32_t c) {
    return c == U'-' || c == U'\'' || c == U'^' || c == U'o' || c == U'*' ||
           c == U'~';
  };
  auto is_mouth = [](char32_t c) {
    static const std::u32string mouths = U"()[]{}<>\\/|DPpdbOo03S$";
    return mouths.find(c) != std::u32string::npos;
  };

  // Forward faces: eyes, optional nose, repeated mouth.
  if (is_eyes(t[i])) {
    std::size_t k = i + 1;
    bool strict_eyes = t[i] == U'8' || t[i] == U'x' || t[i] == U'X';
    if (k < n && is_nose(t[k]) && k + 1 < n && is_mouth(t[k + 1]) &&
        !(is_mouth(t[k]) && run_end(k, t[k]) > k + 1)) {
      ++k;
    }
    if (k < n && is_mouth(t[k])) {
      char32_t mouth = t[k];
      if (strict_eyes && mouth != U'(' && mouth != U')' && mouth != U'D' &&
          mouth != U'P' && mouth != U'p' && mouth != U'd')
        return 0;
      std::size_t j = run_end(k, mouth);
      if (right_token_boundary(t, j)) return j;
    }
    return 0;
  }

  // Reversed faces: repeated mouth, optional nose, eyes.
  if (t[i] == U'(' || t[i] == U')') {
    std::size_t j = run_end(i, t[i]);
    std::size_t k = j;
    if (k < n && (t[k] == U'-' || t[k] == U'\'')) ++k;
    if (k < n && (t[k] == U':' || t[k] == U';' || t[k] == U'=') &&
        right_token_boundary(t, k + 1))
      return k + 1;
  }
  return 0;
}

template <typename Emit>
void scan_emoticons_emoji(Line& line, Emit emit) {
  const std::u32string& t = line.t;
  // Emoji runs first: maximal sequences of emoji scalars plus extenders.
  std::size_t i = 0;
  while (i < t.size()) {
    if (!line.claimed[i] && is_emoji_scalar(t[i])) {
      std::size_t j = i + 1;
      while (j < t.size() && !line.claimed[j] &&
             (is_emoji_scalar(t[j]) || is_emoji_extender(t[j])))
        ++j;
      emit(i, j);
      line.claim(i, j);
      i = j;
    } else {
      ++i;
    }
  }
  // ASCII emoticons on whatever is left.
  i = 0;
  while (i < t.size()) {
    if (line.claimed[i]) {
      ++i;
      continue;
    }
    std::size_t j = match_ascii_emoticon(t, i);
    if (j > i && line.free_range(i, j)) {
      emit(i, j);
      line.claim(i, j);
      i = j;
    } else {
      ++i;
    }
  }
}

// ---------------------------------------------------------------------------
// Lexicon-driven scans
// ---------------------------------------------------------------------------

constexpr std::u32string_view kMaskChars = U"*@#$-.";

bool is_mask_char(char32_t c) {
  return kMaskChars.find(c) != std::u32string_view::npos;
}

struct PreparedEntry {
  const LexiconEntry* entry;
  std::u32string surface;        // original scalars
  std::u32string folded;         // case-folded scalars
  bool natural;
};

std::vector<PreparedEntry> prepare(std::span<const Lexicon> lexicons,
                                   PhenomenonKind kind) {
  std::vector<PreparedEntry> out;
  for (const Lexicon& lexicon : lexicons) {
    for (const LexiconEntry& entry : lexicon.entries()) {
      if (entry.kind != kind) continue;
      std::u32string surface = uni::decode(entry.surface);
      std::u32string folded = surface;
      for (char32_t& c : folded) c = uni::to_lower(c);
      out.push_back({&entry, std::move(surface), std::move(folded),
                     entry.natural});
    }
  }
  // Longest surface first so "fucked up" wins over "fucked".
  std::stable_sort(out.begin(), out.end(),
                   [](const PreparedEntry& a, const PreparedEntry& b) {
                     return a.surface.size() > b.surface.size();
                   });
  return out;
}

// Word-boundary-aware occurrence scan for one prepared entry.
template <typename Emit>
void scan_entry(Line& line, const std::u32string& folded_line,
                const PreparedEntry& prepared, Emit emit) {
  const std::u32string& t = line.t;
  const std::u32string& needle =
      prepared.entry->case_sensitive ? prepared.surface : prepared.folded;
  const std::u32string& haystack =
      prepared.entry->case_sensitive ? t : folded_line;
  if (needle.empty()) return;
  std::size_t i = 0;
  while (i + needle.size() <= t.size()) {
    if (haystack.compare(i, needle.size(), needle) != 0) {
      ++i;
      continue;
    }
    std::size_t j = i + needle.size();
    bool left_ok = !is_word_char(needle.front()) || i == 0 || !is_word_char(t[i - 1]);
    bool right_ok = !is_word_char(needle.back()) || j == t.size() || !is_word_char(t[j]);
    if (left_ok && right_ok && line.free_range(i, j)) {
      emit(i, j);
      line.claim(i, j);
      i = j;
    } else {
      ++i;
    }
  }
}

template <typename Emit>
void scan_lexical_kind(Line& line, const std::u32string& folded_line,
                       std::span<const Lexicon> lexicons, PhenomenonKind kind,
                       Emit emit) {
  for (const PreparedEntry& prepared : prepare(lexicons, kind)) {
    scan_entry(line, folded_line, prepared,
               [&](std::size_t a, std::size_t b) { emit(a, b, prepared); });
  }
}

// Self-censored profanity: a single-word profanity with at least one
// interior character replaced by a mask character ("f*ck", "sh**").
template <typename Emit>
void scan_selfcensored(Line& line, std::span<const Lexicon> lexicons, Emit emit) {
  const std::u32string& t = line.t;
  std::vector<PreparedEntry> entries = prepare(lexicons, PhenomenonKind::OvertProfanity);
  entries.erase(std::remove_if(entries.begin(), entries.end(),
                               [](const PreparedEntry& p) {
                                 return p.surface.find(U' ') != std::u32string::npos;
                               }),
                entries.end());

  auto match_candidate = [&](std::size_t a, std::size_t b)
      -> const PreparedEntry* {
    for (const PreparedEntry& prepared : entries) {
      const std::u32string& pat = prepared.folded;
      if (b - a != pat.size() || pat.size() < 3) continue;
      if (uni::to_lower(t[a]) != pat.front()) continue;
      bool ok = true, interior_mask = false;
      for (std::size_t k = 0; k < pat.size(); ++k) {
        char32_t c = t[a + k];
        if (uni::to_lower(c) == pat[k]) continue;
        if (is_mask_char(c)) {
          if (k > 0 && k < pat.size() - 1) interior_mask = true;
          continue;
        }
        ok = false;
        break;
      }
      if (ok && interior_mask) return &prepared;
    }
    return nullptr;
  };

  std::size_t i = 0;
  while (i < t.size()) {
    if (line.claimed[i] || !(is_letter(t[i]) || is_mask_char(t[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool has_letter = false, has_mask = false;
    while (j < t.size() && !line.claimed[j] &&
           (is_letter(t[j]) || is_mask_char(t[j]))) {
      has_letter |= is_letter(t[j]);
      has_mask |= is_mask_char(t[j]);
      ++j;
    }
    if (!has_letter || !has_mask) {
      i = j;
      continue;
    }
    // Trim optional leading/trailing mask characters (surrounding
    // punctuation shares the mask alphabet: "f*ck." must still match).
    bool matched = false;
    for (std::size_t a = i; a < j && !matched; ++a) {
      if (a > i && !is_mask_char(t[a - 1])) break;
      for (std::size_t b = j; b > a && !matched; --b) {
        if (b < j && !is_mask_char(t[b])) break;
        if (const PreparedEntry* prepared = match_candidate(a, b)) {
          PhenomenonSpan span = make_span(line, PhenomenonKind::SelfCensoredProfanity,
                                          a, b, prepared->entry->canonical);
          emit(std::move(span));
          line.claim(a, b);
          matched = true;
        }
      }
    }
    i = j;
  }
}

// ---------------------------------------------------------------------------
// Elongation, capitalisation, punctuation
// ---------------------------------------------------------------------------

struct LetterRun {
  std::size_t begin, end;
};

// Collapses repetition runs of >= min_run inside word [a,b). Prefers
// candidates found in the wordlist with the most doubled runs, earlier
// runs first; falls back to collapsing every run to a single letter.
std::string collapse_word(const Line& line, std::size_t a, std::size_t b,
                          int min_run, const Wordlist& wordlist) {
  const std::u32string& t = line.t;
  std::vector<LetterRun> runs;
  std::size_t i = a;
  while (i < b) {
    std::size_t j = i + 1;
    while (j < b && t[j] == t[i]) ++j;
    if (j - i >= static_cast<std::size_t>(min_run)) runs.push_back({i, j});
    i = j;
  }
  if (runs.empty()) return line.slice(a, b);
  const std::size_t k = std::min<std::size_t>(runs.size(), 8);

  auto build = [&](unsigned mask) {
    std::u32string word;
    std::size_t pos = a;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      word.append(t, pos, runs[r].begin - pos);
      std::size_t keep = (r < k && (mask >> r) & 1u) ? 2 : 1;
      word.append(keep, t[runs[r].begin]);
      pos = runs[r].end;
    }
    word.append(t, pos, b - pos);
    return word;
  };

  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << k); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned x, unsigned y) {
    int px = __builtin_popcount(x), py = __builtin_popcount(y);
    if (px != py) return px > py;
    for (std::size_t r = 0; r < k; ++r) {
      bool bx = (x >> r) & 1u, by = (y >> r) & 1u;
      if (bx != by) return bx;  // prefer doubling earlier runs
    }
    return false;
  });

  for (unsigned mask : masks) {
    std::u32string candidate = build(mask);
    std::u32string folded = candidate;
    for (char32_t& c : folded) c = uni::to_lower(c);
    if (wordlist.contains(uni::encode(folded))) return uni::encode(candidate);
  }
  return uni::encode(build(0));
}

template <typename Emit>
void scan_elongation(Line& line, int min_run, const Wordlist& wordlist, Emit emit) {
  const std::u32string& t = line.t;
  std::size_t i = 0;
  while (i < t.size()) {
    if (line.claimed[i] || !is_letter(t[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && !line.claimed[j] && is_letter(t[j])) ++j;
    bool has_run = false;
    std::size_t r = i;
    while (r < j) {
      std::size_t s = r + 1;
      while (s < j && t[s] == t[r]) ++s;
      if (s - r >= static_cast<std::size_t>(min_run)) {
        has_run = true;
        break;
      }
      r = s;
    }
    if (has_run) {
      std::string canonical = collapse_word(line, i, j, min_run, wordlist);
      emit(i, j, std::move(canonical));
      line.claim(i, j);
    }
    i = j;
  }
}

bool in_acronym_lexicon(std::span<const Lexicon> lexicons, const std::string& token) {
  for (const Lexicon& lexicon : lexicons) {
    const LexiconEntry* entry = lexicon.find(token);
    if (entry && entry->kind == PhenomenonKind::InformalAcronym) return true;
  }
  return false;
}

template <typename Emit>
void scan_capitalisation(Line& line, std::span<const Lexicon> lexicons, Emit emit) {
  const std::u32string& t = line.t;

  // Zero-length span when the first letter of the line is lowercase.
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (is_letter(t[i])) {
      if (uni::is_lower(t[i]) && !line.claimed[i]) {
        PhenomenonSpan span = make_span(line, PhenomenonKind::Capitalisation, i, i);
        emit(std::move(span));
      }
      break;
    }
  }

  std::size_t i = 0;
  while (i < t.size()) {
    if (line.claimed[i] || !is_letter(t[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool all_upper = true, has_lower = false, swap_upper = false;
    while (j < t.size() && !line.claimed[j] && is_letter(t[j])) {
      if (!uni::is_upper(t[j])) all_upper = false;
      if (uni::is_lower(t[j])) has_lower = true;
      if (j > i && uni::is_upper(t[j])) swap_upper = true;
      ++j;
    }
    std::size_t len = j - i;
    if (all_upper && len >= 2 && !in_acronym_lexicon(lexicons, line.slice(i, j))) {
      std::string folded = uni::fold_case(line.slice(i, j));
      PhenomenonSpan span = make_span(line, PhenomenonKind::Capitalisation, i, j, folded);
      emit(std::move(span));
      line.claim(i, j);
    } else if (has_lower && swap_upper) {
      std::string folded = uni::fold_case(line.slice(i, j));
      PhenomenonSpan span = make_span(line, PhenomenonKind::Capitalisation, i, j, folded);
      emit(std::move(span));
      line.claim(i, j);
    }
    i = j;
  }
}

bool is_terminal_punct(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

template <typename Emit>
void scan_punctuation(Line& line, Emit emit) {
  const std::u32string& t = line.t;

  std::size_t i = 0;
  while (i < t.size()) {
    if (line.claimed[i] || !is_terminal_punct(t[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && !line.claimed[j] && is_terminal_punct(t[j])) ++j;
    if (j - i >= 2) {
      std::string canonical = uni::encode(t[i]);
      PhenomenonSpan span = make_span(line, PhenomenonKind::AtypicalPunctuation, i, j,
                                      std::move(canonical));
      emit(std::move(span));
      line.claim(i, j);
    }
    i = j;
  }

  // Missing terminal punctuation on sentence-like lines: the zero-length
  // span sits at the trimmed end so trailing whitespace does not move it.
  std::size_t trimmed = t.size();
  while (trimmed > 0 && is_space(t[trimmed - 1])) --trimmed;
  if (trimmed == 0) return;
  char32_t last = t[trimmed - 1];
  if (!(is_letter(last) || is_ascii_digit(last))) return;
  if (line.claimed[trimmed - 1]) return;
  std::size_t tokens = 0;
  bool in_token = false;
  for (std::size_t k = 0; k < trimmed; ++k) {
    if (is_space(t[k])) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++tokens;
    }
  }
  if (tokens < 2) return;
  PhenomenonSpan span = make_span(line, PhenomenonKind::AtypicalPunctuation,
                                  trimmed, trimmed);
  emit(std::move(span));
}

std::u32string folded_copy(const std::u32string& t) {
  std::u32string folded = t;
  for (char32_t& c : folded) c = uni::to_lower(c);
  return folded;
}

void sort_spans(std::vector<PhenomenonSpan>& spans) {
  std::stable_sort(spans.begin(), spans.end(),
                   [](const PhenomenonSpan& a, const PhenomenonSpan& b) {
                     if (a.begin != b.begin) return a.begin < b.begin;
                     if (a.end != b.end) return a.end < b.end;
                     return index_of(a.kind) < index_of(b.kind);
                   });
}

}  // namespace

std::string_view emoji_table_version() { return kEmojiTableVersion; }

// ---------------------------------------------------------------------------
// Lexicon / Wordlist
// ---------------------------------------------------------------------------

namespace {

const std::unordered_set<int> kLexiconKinds = {
    index_of(PhenomenonKind::InformalAbbreviation),
    index_of(PhenomenonKind::InformalAcronym),
    index_of(PhenomenonKind::OvertProfanity),
    index_of(PhenomenonKind::Spelling),
    index_of(PhenomenonKind::Grammar),
};

}  // namespace

Lexicon::Lexicon(std::string name, std::string language,
                 std::vector<LexiconEntry> entries)
    : name_(std::move(name)), language_(std::move(language)),
      entries_(std::move(entries)) {
  for (const LexiconEntry& entry : entries_) {
    if (!kLexiconKinds.count(index_of(entry.kind)))
      throw Error("lexicon entry kind not allowed: " +
                  std::string(snake_name(entry.kind)));
    if (entry.surface.empty()) throw Error("empty lexicon surface");
  }
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file: " + path.string());

  std::string name = path.stem().string();
  std::string language = "und";
  std::vector<LexiconEntry> entries;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("#lexicon ", 0) == 0) {
        std::istringstream directive(line.substr(9));
        std::string token;
        while (directive >> token) {
          if (token.rfind("name=", 0) == 0) name = token.substr(5);
          if (token.rfind("lang=", 0) == 0) language = token.substr(5);
        }
      }
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() < 3 || fields.size() > 4)
      throw MalformedRecord(line_no, "lexicon rows need 3 or 4 fields");
    LexiconEntry entry;
    entry.surface = fields[0];
    entry.canonical = fields[1];
    auto kind = phenomenon_from_snake(fields[2]);
    if (!kind || !kLexiconKinds.count(index_of(*kind)))
      throw UnknownKind(fields[2]);
    entry.kind = *kind;
    if (fields.size() == 4 && !fields[3].empty()) {
      std::istringstream attrs(fields[3]);
      std::string attr;
      while (std::getline(attrs, attr, ',')) {
        if (attr == "mild") entry.severity = Severity::Mild;
        else if (attr == "strong") entry.severity = Severity::Strong;
        else if (attr == "natural") entry.natural = true;
        else if (attr == "case_sensitive") entry.case_sensitive = true;
        else if (!attr.empty())
          throw MalformedRecord(line_no, "unknown lexicon attribute: " + attr);
      }
    }
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(name), std::move(language), std::move(entries));
}

const LexiconEntry* Lexicon::find(std::string_view surface) const {
  std::string folded = uni::fold_case(surface);
  for (const LexiconEntry& entry : entries_) {
    if (entry.case_sensitive) {
      if (entry.surface == surface) return &entry;
    } else if (uni::fold_case(entry.surface) == folded) {
      return &entry;
    }
  }
  return nullptr;
}

Wordlist::Wordlist(std::vector<std::string> words) {
  for (std::string& word : words) words_.insert(uni::fold_case(word));
}

Wordlist Wordlist::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open wordlist file: " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line);
  }
  return Wordlist(std::move(words));
}

bool Wordlist::contains(std::string_view word) const {
  return words_.count(uni::fold_case(word)) > 0;
}

// ---------------------------------------------------------------------------
// Public detectors
// ---------------------------------------------------------------------------

std::vector<PhenomenonSpan> detect_all(std::string_view text,
                                       std::string_view language,
                                       std::span<const Lexicon> lexicons) {
  Line line(text);
  std::vector<PhenomenonSpan> spans;

  auto emit_kind = [&](PhenomenonKind kind) {
    return [&spans, &line, kind](std::size_t a, std::size_t b) {
      spans.push_back(make_span(line, kind, a, b));
    };
  };

  scan_urls(line, emit_kind(PhenomenonKind::EntityUrlMentionRt));
  scan_retweet_marks(line, emit_kind(PhenomenonKind::EntityUrlMentionRt));
  scan_mentions(line, emit_kind(PhenomenonKind::EntityUrlMentionRt));
  scan_hashtags(line, emit_kind(PhenomenonKind::HashtagSubreddit));
  scan_subreddits(line, emit_kind(PhenomenonKind::HashtagSubreddit));
  scan_emoticons_emoji(line, emit_kind(PhenomenonKind::EmoticonEmoji));

  scan_selfcensored(line, lexicons,
                    [&](PhenomenonSpan span) { spans.push_back(std::move(span)); });

  const std::u32string folded = folded_copy(line.t);
  auto emit_lexical = [&](std::size_t a, std::size_t b, const PreparedEntry& p) {
    PhenomenonSpan span = make_span(line, p.entry->kind, a, b, p.entry->canonical);
    span.natural_form = p.natural;
    spans.push_back(std::move(span));
  };
  scan_lexical_kind(line, folded, lexicons, PhenomenonKind::OvertProfanity, emit_lexical);
  scan_lexical_kind(line, folded, lexicons, PhenomenonKind::InformalAcronym, emit_lexical);
  scan_lexical_kind(line, folded, lexicons, PhenomenonKind::InformalAbbreviation, emit_lexical);
  scan_lexical_kind(line, folded, lexicons, PhenomenonKind::Spelling, emit_lexical);
  scan_lexical_kind(line, folded, lexicons, PhenomenonKind::Grammar, emit_lexical);

  scan_elongation(line, kDefaultMinRun, builtin_wordlist(language),
                  [&](std::size_t a, std::size_t b, std::string canonical) {
                    spans.push_back(make_span(line, PhenomenonKind::WordElongation,
                                              a, b, std::move(canonical)));
                  });
  scan_capitalisation(line, lexicons,
                      [&](PhenomenonSpan span) { spans.push_back(std::move(span)); });
  scan_punctuation(line,
                   [&](PhenomenonSpan span) { spans.push_back(std::move(span)); });

  sort_spans(spans);
  return spans;
}

EntityCounts detect_entities(std::string_view text) {
  Line line(text);
  EntityCounts counts;
  scan_urls(line, [&](std::size_t, std::size_t) { ++counts.urls; });
  scan_retweet_marks(line, [&](std::size_t, std::size_t) { ++counts.retweet_marks; });
  scan_mentions(line, [&](std::size_t, std::size_t) { ++counts.mentions; });
  scan_hashtags(line, [&](std::size_t, std::size_t) { ++counts.hashtags; });
  return counts;
}

std::vector<PhenomenonSpan> detect_elongation(std::string_view text, int min_run,
                                              const Wordlist& wordlist) {
  if (min_run < 2) throw InvalidThreshold("min_run must be >= 2");
  Line line(text);
  std::vector<PhenomenonSpan> spans;
  scan_elongation(line, min_run, wordlist,
                  [&](std::size_t a, std::size_t b, std::string canonical) {
                    spans.push_back(make_span(line, PhenomenonKind::WordElongation,
                                              a, b, std::move(canonical)));
                  });
  sort_spans(spans);
  return spans;
}

std::vector<PhenomenonSpan> detect_capitalisation(std::string_view text,
                                                  std::string_view /*language*/,
                                                  std::span<const Lexicon> lexicons) {
  Line line(text);
  auto drop = [](std::size_t, std::size_t) {};
  scan_urls(line, drop);
  scan_retweet_marks(line, drop);
  scan_mentions(line, drop);
  scan_hashtags(line, drop);
  scan_subreddits(line, drop);
  scan_emoticons_emoji(line, drop);

  std::vector<PhenomenonSpan> spans;
  scan_capitalisation(line, lexicons,
                      [&](PhenomenonSpan span) { spans.push_back(std::move(span)); });
  sort_spans(spans);
  return spans;
}

std::vector<PhenomenonSpan> detect_punctuation(std::string_view text,
                                               std::string_view /*language*/) {
  Line line(text);
  auto drop = [](std::size_t, std::size_t) {};
  scan_urls(line, drop);
  scan_retweet_marks(line, drop);
  scan_mentions(line, drop);
  scan_hashtags(line, drop);
  scan_subreddits(line, drop);
  scan_emoticons_emoji(line, drop);

  std::vector<PhenomenonSpan> spans;
  scan_punctuation(line,
                   [&](PhenomenonSpan span) { spans.push_back(std::move(span)); });
  sort_spans(spans);
  return spans;
}

std::vector<PhenomenonSpan> detect_emoticons(std::string_view text) {
  Line line(text);
  std::vector<PhenomenonSpan> spans;
  scan_emoticons_emoji(line, [&](std::size_t a, std::size_t b) {
    spans.push_back(make_span(line, PhenomenonKind::EmoticonEmoji, a, b));
  });
  sort_spans(spans);
  return spans;
}

// ---------------------------------------------------------------------------
// Built-in data
// ---------------------------------------------------------------------------

namespace {

std::mutex g_builtin_mutex;

}  // namespace

std::span<const Lexicon> builtin_lexicons(std::string_view language) {
  static std::map<std::string, std::vector<Lexicon>, std::less<>> cache;
  std::scoped_lock lock(g_builtin_mutex);
  auto it = cache.find(language);
  if (it == cache.end()) {
    std::vector<Lexicon> lexicons;
    std::filesystem::path path =
        data_dir() / "lexicons" / (std::string(language) + ".tsv");
    if (std::filesystem::exists(path)) lexicons.push_back(Lexicon::load(path));
    it = cache.emplace(std::string(language), std::move(lexicons)).first;
  }
  return it->second;
}

const Wordlist& builtin_wordlist(std::string_view language) {
  static std::map<std::string, Wordlist, std::less<>> cache;
  std::scoped_lock lock(g_builtin_mutex);
  auto it = cache.find(language);
  if (it == cache.end()) {
    std::filesystem::path path =
        data_dir() / "wordlists" / (std::string(language) + ".txt");
    Wordlist wordlist;
    if (std::filesystem::exists(path)) wordlist = Wordlist::load(path);
    it = cache.emplace(std::string(language), std::move(wordlist)).first;
  }
  return it->second;
}

}  // namespace ugceval
