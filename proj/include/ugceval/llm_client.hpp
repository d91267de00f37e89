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

#ifndef UGCEVAL_LLM_CLIENT_HPP_
#define UGCEVAL_LLM_CLIENT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ugceval/corpus.hpp"
#include "ugceval/prompting.hpp"

namespace ugceval {

struct GenerationParams {
  double temperature = 0.0;      // greedy by default
  int max_output_tokens = 512;
  std::string model_id;
  std::string endpoint;          // full URL of a chat-completions endpoint
  double timeout_seconds = 120.0;
  int max_retries = 2;
  int concurrency = 4;           // in-flight request cap
  int backoff_base_ms = 250;     // exponential backoff seed
  // Bearer token is read from this environment variable and never logged.
  std::string token_env = "UGCEVAL_API_TOKEN";
};

enum class OutputStatus { Ok, Refusal, Empty, TransportError };

std::string_view status_name(OutputStatus s);
std::optional<OutputStatus> status_from_name(std::string_view name);

struct SegmentOutput {
  std::string segment_id;
  std::string raw;
  std::optional<std::string> cleaned;  // present and non-empty iff status Ok
  OutputStatus status = OutputStatus::Empty;
  std::optional<std::string> refusal_reason;  // pattern id when status Refusal
  long latency_ms = 0;
  int retries = 0;
};

// One (endpoint x guideline configuration x corpus) evaluation run.
// `outputs` aligns 1:1 with the corpus segments, in corpus order.
struct RunResult {
  std::string corpus_name;
  PromptConfig config = PromptConfig::none("English", "French");
  GenerationParams params;
  std::vector<SegmentOutput> outputs;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;
};

// Versioned refusal pattern list: `id<TAB>pattern` rows, case-insensitive
// substring match, `^` anchors at the start, first matching row wins.
class RefusalPatterns {
 public:
  struct Pattern {
    std::string id;
    std::string needle;  // lowercase
    bool anchored = false;
  };

  static RefusalPatterns load(const std::filesystem::path& path);
  static const RefusalPatterns& builtin();

  // First matching pattern id, if any.
  std::optional<std::string> match(std::string_view raw) const;
  const std::vector<Pattern>& patterns() const { return patterns_; }

 private:
  std::vector<Pattern> patterns_;
};

std::optional<std::string> detect_refusal(std::string_view raw,
                                          const RefusalPatterns& patterns);

struct Extraction {
  OutputStatus status = OutputStatus::Ok;  // Ok, Refusal or Empty
  std::string text;                        // cleaned translation when Ok
  std::string refusal_pattern;             // when Refusal
};

// Post-processes a verbose model output: refusal detection first, then
// iterated stripping of target-label echoes, surrounding quote pairs,
// code fences and "Translation:"-style preambles (plus French/German
// analogues). Idempotent. Empty residue collapses to status Empty.
Extraction extract_translation(std::string_view raw, std::string_view target_language,
                               const RefusalPatterns& patterns);

struct RunOptions {
  // Existing run file to resume from: segments already status Ok are not
  // re-requested.
  std::optional<std::filesystem::path> resume_from;
  // When set, every completed segment is appended here before cleaning
  // ends the run (raw outputs survive crashes); finalized in corpus order.
  std::optional<std::filesystem::path> persist_to;
  std::ostream* log = nullptr;
};

// Translates a corpus one line per request against a chat-completions
// endpoint. Transport failures are retried with exponential backoff and
// recorded per segment; the run only fails as a whole if the corpus is
// empty or the endpoint is unusable for every segment.
RunResult run_batch(const ParallelCorpus& corpus, const PromptConfig& config,
                    const GenerationParams& params, const RefusalPatterns& patterns,
                    const RunOptions& options = {});

// JSONL persistence of run outputs, one SegmentOutput per line.
void save_run_jsonl(const RunResult& run, const std::filesystem::path& path);
std::vector<SegmentOutput> load_run_outputs_jsonl(const std::filesystem::path& path);

// Canonical output file name: {corpus}.{guidelines|none}.{model_id}.jsonl
std::string run_output_filename(const std::string& corpus_name,
                                const std::string& guideline_name,
                                const std::string& model_id);

}  // namespace ugceval

#endif  // UGCEVAL_LLM_CLIENT_HPP_
