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

#include "ugceval/llm_client.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <httplib.h>
#include <json.hpp>

#include "ugceval/data_paths.hpp"
#include "ugceval/errors.hpp"
#include "ugceval/unicode.hpp"

namespace ugceval {

namespace {

using nlohmann::json;

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c += 0x20;
  return out;
}

std::string utc_now_iso8601() {
  using namespace std::chrono;
  auto now = system_clock::now();
  std::time_t t = system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (static_cast<unsigned char>(s[a]) <= ' ')) ++a;
  while (b > a && (static_cast<unsigned char>(s[b - 1]) <= ' ')) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string_view status_name(OutputStatus s) {
  switch (s) {
    case OutputStatus::Ok: return "ok";
    case OutputStatus::Refusal: return "refusal";
    case OutputStatus::Empty: return "empty";
    case OutputStatus::TransportError: return "transport_error";
  }
  return "";
}

std::optional<OutputStatus> status_from_name(std::string_view name) {
  if (name == "ok") return OutputStatus::Ok;
  if (name == "refusal") return OutputStatus::Refusal;
  if (name == "empty") return OutputStatus::Empty;
  if (name == "transport_error") return OutputStatus::TransportError;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Refusal patterns
// ---------------------------------------------------------------------------

RefusalPatterns RefusalPatterns::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open refusal pattern file: " + path.string());
  RefusalPatterns result;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    Pattern pattern;
    pattern.id = line.substr(0, tab);
    std::string needle = line.substr(tab + 1);
    if (!needle.empty() && needle[0] == '^') {
      pattern.anchored = true;
      needle.erase(needle.begin());
    }
    pattern.needle = uni::fold_case(needle);
    if (!pattern.id.empty() && !pattern.needle.empty())
      result.patterns_.push_back(std::move(pattern));
  }
  return result;
}

const RefusalPatterns& RefusalPatterns::builtin() {
  static const RefusalPatterns patterns =
      RefusalPatterns::load(data_dir() / "refusal_patterns.tsv");
  return patterns;
}

std::optional<std::string> RefusalPatterns::match(std::string_view raw) const {
  std::string folded = uni::fold_case(trim(raw));
  for (const Pattern& pattern : patterns_) {
    if (pattern.anchored) {
      if (folded.rfind(pattern.needle, 0) == 0) return pattern.id;
    } else if (folded.find(pattern.needle) != std::string::npos) {
      return pattern.id;
    }
  }
  return std::nullopt;
}

std::optional<std::string> detect_refusal(std::string_view raw,
                                          const RefusalPatterns& patterns) {
  return patterns.match(raw);
}

// ---------------------------------------------------------------------------
// Output post-processing
// ---------------------------------------------------------------------------

namespace {

// Strips one layer of wrapping; returns true if anything changed.
bool strip_once(std::string& text, const std::string& target_language) {
  const std::string before = text;

  // Leading "<target language>:" echo (also the bracketed template form).
  for (const std::string& label :
       {target_language + ":", "[" + target_language + "]:"}) {
    if (ascii_lower(text).rfind(ascii_lower(label), 0) == 0) {
      text = trim(text.substr(label.size()));
      return true;
    }
  }

  // Surrounding quote pairs.
  static const std::pair<std::string_view, std::string_view> kQuotes[] = {
      {"\"", "\""}, {"'", "'"},  {"«", "»"},   // « »
      {"“", "”"},                              // " "
      {"„", "“"},                              // „ "
      {"‘", "’"},                              // ' '
  };
  for (const auto& [open, close] : kQuotes) {
    if (text.size() >= open.size() + close.size() &&
        text.compare(0, open.size(), open) == 0 &&
        text.compare(text.size() - close.size(), close.size(), close) == 0) {
      text = trim(text.substr(open.size(),
                              text.size() - open.size() - close.size()));
      return true;
    }
  }

  // Markdown code fences.
  if (text.size() >= 6 && text.rfind("```", 0) == 0 &&
      text.compare(text.size() - 3, 3, "```") == 0) {
    std::string inner = text.substr(3, text.size() - 6);
    // Drop an info string like ```text on the opening fence.
    if (std::size_t nl = inner.find('\n'); nl != std::string::npos &&
                                           inner.substr(0, nl).find(' ') ==
                                               std::string::npos) {
      std::string head = inner.substr(0, nl);
      bool word_only = !head.empty();
      for (char c : head)
        word_only = word_only && ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'));
      if (word_only) inner = inner.substr(nl + 1);
    }
    text = trim(inner);
    return true;
  }

  // Translation preambles, English / French / German.
  static const std::string_view kPreambles[] = {
      "here is the translation:", "here's the translation:", "translation:",
      "translated text:",         "voici la traduction :",   "voici la traduction:",
      "traduction :",             "traduction:",             "hier ist die übersetzung:",
      "übersetzung:",
  };
  std::string folded = uni::fold_case(text);
  for (std::string_view preamble : kPreambles) {
    if (folded.rfind(preamble, 0) == 0) {
      text = trim(text.substr(preamble.size()));
      return true;
    }
  }

  return text != before;
}

}  // namespace

Extraction extract_translation(std::string_view raw, std::string_view target_language,
                               const RefusalPatterns& patterns) {
  Extraction extraction;
  if (auto pattern = detect_refusal(raw, patterns)) {
    extraction.status = OutputStatus::Refusal;
    extraction.refusal_pattern = *pattern;
    return extraction;
  }

  std::string text = trim(raw);
  std::string label(target_language);
  while (strip_once(text, label)) {
  }
  // Verbose outputs sometimes continue after the translation line.
  if (std::size_t nl = text.find('\n'); nl != std::string::npos) {
    text = trim(text.substr(0, nl));
    while (strip_once(text, label)) {
    }
  }

  if (text.empty()) {
    extraction.status = OutputStatus::Empty;
    return extraction;
  }
  extraction.status = OutputStatus::Ok;
  extraction.text = std::move(text);
  return extraction;
}

// ---------------------------------------------------------------------------
// Batch runner
// ---------------------------------------------------------------------------

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  std::size_t scheme = url.find("://");
  if (scheme == std::string::npos)
    throw Error("endpoint must be a full http(s) URL: " + url);
  std::size_t slash = url.find('/', scheme + 3);
  Endpoint endpoint;
  if (slash == std::string::npos) {
    endpoint.origin = url;
    endpoint.path = "/v1/chat/completions";
  } else {
    endpoint.origin = url.substr(0, slash);
    endpoint.path = url.substr(slash);
    if (endpoint.path == "/") endpoint.path = "/v1/chat/completions";
  }
  return endpoint;
}

struct RequestOutcome {
  bool ok = false;
  std::string content;
  std::string error;  // transport error description, never the token
  int retries = 0;
};

RequestOutcome request_one(httplib::Client& client, const Endpoint& endpoint,
                           const GenerationParams& params, const ChatPrompt& prompt) {
  json body;
  body["model"] = params.model_id;
  body["messages"] = json::array({
      json{{"role", "system"}, {"content", prompt.system}},
      json{{"role", "user"}, {"content", prompt.user}},
  });
  body["temperature"] = params.temperature;
  body["max_tokens"] = params.max_output_tokens;
  const std::string payload = body.dump();

  RequestOutcome outcome;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    if (attempt > 0) {
      outcome.retries = attempt;
      std::this_thread::sleep_for(std::chrono::milliseconds(
          params.backoff_base_ms * (1 << (attempt - 1))));
    }
    httplib::Result result =
        client.Post(endpoint.path, payload, "application/json");
    if (!result) {
      outcome.error = "connection failed: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status == 401 || result->status == 403) {
      outcome.error = "auth error: HTTP " + std::to_string(result->status);
      break;  // retrying an auth failure cannot help
    }
    if (result->status == 429) {
      outcome.error = "quota exceeded: HTTP 429";
      continue;
    }
    if (result->status != 200) {
      outcome.error = "HTTP " + std::to_string(result->status);
      continue;
    }
    json response = json::parse(result->body, nullptr, false);
    if (response.is_discarded() || !response.contains("choices") ||
        !response["choices"].is_array() || response["choices"].empty()) {
      outcome.error = "malformed response body";
      continue;
    }
    const json& first = response["choices"][0];
    if (!first.contains("message") || !first["message"].contains("content") ||
        !first["message"]["content"].is_string()) {
      outcome.error = "malformed response body";
      continue;
    }
    outcome.ok = true;
    outcome.content = first["message"]["content"].get<std::string>();
    return outcome;
  }
  return outcome;
}

json output_to_json(const SegmentOutput& output) {
  json record;
  record["segment_id"] = output.segment_id;
  record["raw"] = output.raw;
  if (output.cleaned) record["cleaned"] = *output.cleaned;
  record["status"] = std::string(status_name(output.status));
  if (output.refusal_reason) record["refusal_reason"] = *output.refusal_reason;
  record["latency_ms"] = output.latency_ms;
  record["retries"] = output.retries;
  return record;
}

SegmentOutput output_from_json(const json& record, std::size_t line_no) {
  if (!record.is_object() || !record.contains("segment_id") ||
      !record.contains("status"))
    throw MalformedRecord(line_no, "bad run output record");
  SegmentOutput output;
  output.segment_id = record["segment_id"].get<std::string>();
  output.raw = record.value("raw", std::string());
  if (record.contains("cleaned")) output.cleaned = record["cleaned"].get<std::string>();
  auto status = status_from_name(record["status"].get<std::string>());
  if (!status) throw MalformedRecord(line_no, "unknown status");
  output.status = *status;
  if (record.contains("refusal_reason"))
    output.refusal_reason = record["refusal_reason"].get<std::string>();
  output.latency_ms = record.value("latency_ms", 0L);
  output.retries = record.value("retries", 0);
  return output;
}

}  // namespace

RunResult run_batch(const ParallelCorpus& corpus, const PromptConfig& config,
                    const GenerationParams& params, const RefusalPatterns& patterns,
                    const RunOptions& options) {
  if (corpus.segments.empty()) throw Error("cannot run an empty corpus");

  RunResult run;
  run.corpus_name = corpus.name;
  run.config = config;
  run.params = params;
  run.started_at = utc_now_iso8601();
  run.outputs.resize(corpus.segments.size());

  // Segments already answered in a previous run are kept as-is.
  std::unordered_map<std::string, SegmentOutput> resumed;
  if (options.resume_from && std::filesystem::exists(*options.resume_from)) {
    for (SegmentOutput& output : load_run_outputs_jsonl(*options.resume_from)) {
      if (output.status == OutputStatus::Ok)
        resumed.emplace(output.segment_id, std::move(output));
    }
  }

  const Endpoint endpoint = split_endpoint(params.endpoint);
  const char* token = std::getenv(params.token_env.c_str());

  std::mutex persist_mutex;
  std::ofstream persist;
  if (options.persist_to) {
    persist.open(*options.persist_to, std::ios::binary | std::ios::app);
    if (!persist) throw Error("cannot open output file: " + options.persist_to->string());
  }

  std::atomic<std::size_t> next{0};
  const int worker_count =
      std::max(1, std::min<int>(params.concurrency,
                                static_cast<int>(corpus.segments.size())));

  auto worker = [&]() {
    httplib::Client client(endpoint.origin);
    client.set_connection_timeout(std::chrono::duration<double>(params.timeout_seconds));
    client.set_read_timeout(std::chrono::duration<double>(params.timeout_seconds));
    if (token && *token) client.set_bearer_token_auth(token);

    while (true) {
      std::size_t index = next.fetch_add(1);
      if (index >= corpus.segments.size()) break;
      const Segment& segment = corpus.segments[index];

      if (auto it = resumed.find(segment.id); it != resumed.end()) {
        run.outputs[index] = it->second;
        continue;
      }

      SegmentOutput output;
      output.segment_id = segment.id;
      const auto start = std::chrono::steady_clock::now();
      const ChatPrompt prompt = build_prompt(config, segment.source);
      RequestOutcome outcome = request_one(client, endpoint, params, prompt);
      output.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      output.retries = outcome.retries;

      if (!outcome.ok) {
        output.status = OutputStatus::TransportError;
        output.refusal_reason = std::nullopt;
        output.raw = outcome.error;
      } else {
        output.raw = outcome.content;
        Extraction extraction = extract_translation(
            outcome.content, config.target_language(), patterns);
        output.status = extraction.status;
        if (extraction.status == OutputStatus::Ok) {
          output.cleaned = extraction.text;
        } else if (extraction.status == OutputStatus::Refusal) {
          output.refusal_reason = extraction.refusal_pattern;
        }
      }

      if (options.log) {
        std::scoped_lock lock(persist_mutex);
        *options.log << segment.id << '\t' << status_name(output.status) << '\n';
      }
      if (persist.is_open()) {
        std::scoped_lock lock(persist_mutex);
        persist << output_to_json(output).dump() << '\n';
        persist.flush();
      }
      run.outputs[index] = std::move(output);
    }
  };

  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (int i = 0; i < worker_count; ++i) workers.emplace_back(worker);
  for (std::thread& thread : workers) thread.join();

  run.finished_at = utc_now_iso8601();

  bool all_failed = true;
  for (const SegmentOutput& output : run.outputs)
    all_failed = all_failed && output.status == OutputStatus::TransportError;
  if (all_failed && run.outputs.size() > 1)
    if (options.log)
      *options.log << "warning: every segment failed with a transport error\n";

  // Rewrite the persisted file in corpus order once the run is complete.
  if (options.persist_to) {
    persist.close();
    save_run_jsonl(run, *options.persist_to);
  }
  return run;
}

void save_run_jsonl(const RunResult& run, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write run file: " + path.string());
    for (const SegmentOutput& output : run.outputs)
      out << output_to_json(output).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::vector<SegmentOutput> load_run_outputs_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open run file: " + path.string());
  std::vector<SegmentOutput> outputs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded()) throw MalformedRecord(line_no, "invalid JSON");
    outputs.push_back(output_from_json(record, line_no));
  }
  return outputs;
}

std::string run_output_filename(const std::string& corpus_name,
                                const std::string& guideline_name,
                                const std::string& model_id) {
  const std::string guidelines = guideline_name.empty() ? "none" : guideline_name;
  return corpus_name + "." + guidelines + "." + model_id + ".jsonl";
}

}  // namespace ugceval
