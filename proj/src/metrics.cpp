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

#include "ugceval/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <unordered_map>

#include "ugceval/errors.hpp"
#include "ugceval/unicode.hpp"

namespace ugceval {

namespace {

// ---------------------------------------------------------------------------
// 13a tokenizer. The passes replicate mteval-v13a's regex pipeline exactly,
// including its left-to-right non-overlapping substitution semantics; any
// change here must be re-validated against the frozen golden fixtures.
// ---------------------------------------------------------------------------

bool in_pad_set(char c) {
  unsigned char b = static_cast<unsigned char>(c);
  return (b >= 0x20 && b <= 0x26) || (b >= 0x28 && b <= 0x2B) || b == 0x2F ||
         (b >= 0x3A && b <= 0x40) || (b >= 0x5B && b <= 0x60) ||
         (b >= 0x7B && b <= 0x7E);
}

bool ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool period_comma(char c) { return c == '.' || c == ','; }

void replace_substr(std::string& text, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string pre_normalize(std::string_view input) {
  std::string text(input);
  replace_substr(text, "<skipped>", "");
  replace_substr(text, "-\n", "");
  replace_substr(text, "\n", " ");
  if (text.find('&') != std::string::npos) {
    replace_substr(text, "&quot;", "\"");
    replace_substr(text, "&amp;", "&");
    replace_substr(text, "&lt;", "<");
    replace_substr(text, "&gt;", ">");
  }
  return " " + text + " ";
}

std::string pad_symbols(const std::string& text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char c : text) {
    if (in_pad_set(c)) {
      out += ' ';
      out += c;
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

// ([^0-9])([.,]) -> "\1 \2 "
std::string split_punct_after(const std::string& text) {
  std::string out;
  out.reserve(text.size() * 2);
  std::size_t i = 0;
  while (i < text.size()) {
    if (!ascii_digit(text[i]) && i + 1 < text.size() && period_comma(text[i + 1])) {
      out += text[i];
      out += ' ';
      out += text[i + 1];
      out += ' ';
      i += 2;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

// ([.,])([^0-9]) -> " \1 \2"
std::string split_punct_before(const std::string& text) {
  std::string out;
  out.reserve(text.size() * 2);
  std::size_t i = 0;
  while (i < text.size()) {
    if (period_comma(text[i]) && i + 1 < text.size() && !ascii_digit(text[i + 1])) {
      out += ' ';
      out += text[i];
      out += ' ';
      out += text[i + 1];
      i += 2;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

// ([0-9])(-) -> "\1 - "
std::string split_digit_dash(const std::string& text) {
  std::string out;
  out.reserve(text.size() * 2);
  std::size_t i = 0;
  while (i < text.size()) {
    if (ascii_digit(text[i]) && i + 1 < text.size() && text[i + 1] == '-') {
      out += text[i];
      out += " - ";
      i += 2;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

// Splits on the Unicode whitespace set that Python's str.split() uses.
std::vector<std::string> split_unicode_ws(const std::string& text) {
  std::vector<std::string> tokens;
  std::u32string scalars = uni::decode(text);
  std::u32string current;
  for (char32_t cp : scalars) {
    if (uni::is_space(cp)) {
      if (!current.empty()) {
        tokens.push_back(uni::encode(current));
        current.clear();
      }
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) tokens.push_back(uni::encode(current));
  return tokens;
}

// Python str.rstrip(): trailing Unicode whitespace removed.
std::string rstrip(std::string_view input) {
  std::u32string scalars = uni::decode(input);
  std::size_t end = scalars.size();
  while (end > 0 && uni::is_space(scalars[end - 1])) --end;
  return uni::encode(std::u32string_view(scalars).substr(0, end));
}

// ---------------------------------------------------------------------------
// BLEU statistics
// ---------------------------------------------------------------------------

constexpr int kMaxOrder = 4;
constexpr double kLogFloor = -9999999999.0;  // my_log(0) in the reference

struct NgramKey {
  std::vector<std::string> tokens;
  bool operator==(const NgramKey& other) const { return tokens == other.tokens; }
};

struct NgramHash {
  std::size_t operator()(const NgramKey& key) const {
    std::size_t h = 1469598103934665603ull;
    for (const std::string& token : key.tokens) {
      for (char c : token) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
      }
      h ^= 0x1F;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using NgramCounts = std::unordered_map<NgramKey, std::size_t, NgramHash>;

NgramCounts extract_ngrams(const std::vector<std::string>& tokens, int max_n) {
  NgramCounts counts;
  for (int n = 1; n <= max_n; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      NgramKey key;
      key.tokens.assign(tokens.begin() + i, tokens.begin() + i + n);
      ++counts[key];
    }
  }
  return counts;
}

std::size_t closest_ref_len(std::size_t hyp_len, const std::vector<std::size_t>& lens) {
  std::size_t best = lens.front();
  std::size_t best_diff =
      hyp_len > best ? hyp_len - best : best - hyp_len;
  for (std::size_t len : lens) {
    std::size_t diff = hyp_len > len ? hyp_len - len : len - hyp_len;
    if (diff < best_diff || (diff == best_diff && len < best)) {
      best = len;
      best_diff = diff;
    }
  }
  return best;
}

struct Stats {
  std::size_t sys_len = 0;
  std::size_t ref_len = 0;
  std::array<std::size_t, kMaxOrder> correct{};
  std::array<std::size_t, kMaxOrder> total{};
};

void accumulate_pair(Stats& stats, const std::string& hyp,
                     const std::vector<std::string>& refs, int max_n) {
  std::vector<std::string> hyp_tokens = tokenize_13a(rstrip(hyp));

  NgramCounts ref_ngrams;
  std::vector<std::size_t> ref_lens;
  for (const std::string& ref : refs) {
    std::vector<std::string> ref_tokens = tokenize_13a(rstrip(ref));
    ref_lens.push_back(ref_tokens.size());
    for (auto& [key, count] : extract_ngrams(ref_tokens, max_n)) {
      std::size_t& slot = ref_ngrams[key];
      slot = std::max(slot, count);
    }
  }

  stats.sys_len += hyp_tokens.size();
  stats.ref_len += closest_ref_len(hyp_tokens.size(), ref_lens);
  for (const auto& [key, count] : extract_ngrams(hyp_tokens, max_n)) {
    const std::size_t n = key.tokens.size() - 1;
    stats.total[n] += count;
    auto it = ref_ngrams.find(key);
    if (it != ref_ngrams.end()) stats.correct[n] += std::min(count, it->second);
  }
}

BleuScore compute_from_stats(const Stats& stats, int max_n,
                             BleuSmoothing smoothing, bool effective_order) {
  BleuScore result;
  result.hyp_len = stats.sys_len;
  result.ref_len = stats.ref_len;
  result.correct = stats.correct;
  result.total = stats.total;

  double bp = 1.0;
  if (stats.sys_len < stats.ref_len) {
    bp = stats.sys_len > 0
             ? std::exp(1.0 - static_cast<double>(stats.ref_len) / stats.sys_len)
             : 0.0;
  }
  result.brevity_penalty = bp;

  std::array<double, kMaxOrder> precisions_pct{};
  double smooth_mteval = 1.0;
  int eff_order = max_n;
  for (int n = 1; n <= max_n; ++n) {
    if (stats.total[n - 1] == 0) break;
    if (effective_order) eff_order = n;
    if (stats.correct[n - 1] == 0) {
      if (smoothing == BleuSmoothing::Exponential) {
        smooth_mteval *= 2.0;
        precisions_pct[n - 1] = 100.0 / (smooth_mteval * stats.total[n - 1]);
      }
    } else {
      precisions_pct[n - 1] =
          100.0 * stats.correct[n - 1] / stats.total[n - 1];
    }
  }

  double log_sum = 0.0;
  for (int n = 0; n < eff_order; ++n) {
    log_sum += precisions_pct[n] == 0.0 ? kLogFloor : std::log(precisions_pct[n]);
  }
  result.score = bp * std::exp(log_sum / eff_order);
  for (int n = 0; n < kMaxOrder; ++n) result.precisions[n] = precisions_pct[n] / 100.0;
  return result;
}

}  // namespace

std::vector<std::string> tokenize_13a(std::string_view text) {
  std::string normalized = pre_normalize(text);
  normalized = pad_symbols(normalized);
  normalized = split_punct_after(normalized);
  normalized = split_punct_before(normalized);
  normalized = split_digit_dash(normalized);
  return split_unicode_ws(normalized);
}

BleuScore corpus_bleu(std::span<const std::string> hyps,
                      std::span<const std::vector<std::string>> refs, int max_n,
                      BleuSmoothing smoothing) {
  if (hyps.empty() || hyps.size() != refs.size())
    throw LengthMismatch("need equally many hypotheses and reference sets");
  if (max_n < 1 || max_n > kMaxOrder)
    throw Error("max_n must be between 1 and 4");
  for (const std::vector<std::string>& ref_set : refs)
    if (ref_set.empty()) throw LengthMismatch("empty reference set");

  Stats stats;
  for (std::size_t i = 0; i < hyps.size(); ++i)
    accumulate_pair(stats, hyps[i], refs[i], max_n);
  return compute_from_stats(stats, max_n, smoothing, /*effective_order=*/false);
}

BleuScore sentence_bleu(std::string_view hyp, std::span<const std::string> refs,
                        int max_n) {
  if (refs.empty()) throw LengthMismatch("sentence_bleu needs references");
  if (max_n < 1 || max_n > kMaxOrder)
    throw Error("max_n must be between 1 and 4");
  Stats stats;
  accumulate_pair(stats, std::string(hyp),
                  std::vector<std::string>(refs.begin(), refs.end()), max_n);
  return compute_from_stats(stats, max_n, BleuSmoothing::Exponential,
                            /*effective_order=*/true);
}

ScoreIngest ingest_external_scores(const std::filesystem::path& path,
                                   const std::string& metric_name,
                                   const RunResult& run) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open score file: " + path.string());

  std::unordered_map<std::string, const SegmentOutput*> by_id;
  for (const SegmentOutput& output : run.outputs) by_id[output.segment_id] = &output;

  std::map<std::string, double> file_scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw MalformedRecord(line_no, "expected segment_id<TAB>score");
    std::string id = line.substr(0, tab);
    std::string value_text = line.substr(tab + 1);
    if (!by_id.count(id)) throw UnknownSegmentId(id);
    char* end = nullptr;
    double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || (end && *end != '\0'))
      throw NonNumericScore("non-numeric score for segment " + id + ": " +
                            value_text);
    file_scores[id] = value;
  }

  ScoreIngest ingest;
  for (const SegmentOutput& output : run.outputs) {
    auto it = file_scores.find(output.segment_id);
    const bool zero_rule = output.status == OutputStatus::Refusal ||
                           output.status == OutputStatus::Empty;
    if (it == file_scores.end()) {
      if (zero_rule) {
        // The zero rule stands even without a file row.
        ingest.scores.push_back({output.segment_id, metric_name, 0.0, true});
      } else {
        ingest.missing_ids.push_back(output.segment_id);
      }
      continue;
    }
    SegmentScore score;
    score.segment_id = output.segment_id;
    score.metric_name = metric_name;
    if (zero_rule) {
      score.value = 0.0;
      score.zeroed = true;
    } else {
      score.value = it->second;
    }
    ingest.scores.push_back(std::move(score));
  }
  return ingest;
}

double corpus_average_pct(std::span<const SegmentScore> scores) {
  if (scores.empty()) return 0.0;
  double sum = 0.0;
  for (const SegmentScore& score : scores) sum += score.value;
  return 100.0 * sum / static_cast<double>(scores.size());
}

}  // namespace ugceval
