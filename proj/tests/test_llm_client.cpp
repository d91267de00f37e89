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

#include <doctest.h>

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "support/test_util.hpp"
#include "ugceval/errors.hpp"
#include "ugceval/llm_client.hpp"

using namespace ugceval;
using nlohmann::json;

namespace {

// In-process chat-completions mock. The handler receives the user message
// and decides the reply; scripted failures are keyed by attempt counts.
class MockEndpoint {
 public:
  using Responder = std::function<std::string(const std::string& user_message)>;

  explicit MockEndpoint(Responder responder)
      : responder_(std::move(responder)) {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& request, httplib::Response& response) {
                   handle(request, response);
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockEndpoint() {
    server_.stop();
    thread_.join();
  }

  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
  }

  int requests() const { return requests_.load(); }
  void fail_next(int n, int status) {
    std::scoped_lock lock(mutex_);
    fail_remaining_ = n;
    fail_status_ = status;
  }

 private:
  void handle(const httplib::Request& request, httplib::Response& response) {
    ++requests_;
    {
      std::scoped_lock lock(mutex_);
      if (fail_remaining_ > 0) {
        --fail_remaining_;
        response.status = fail_status_;
        response.set_content("{}", "application/json");
        return;
      }
    }
    json body = json::parse(request.body);
    std::string user = body["messages"][1]["content"].get<std::string>();
    json reply;
    reply["choices"] =
        json::array({json{{"message", json{{"role", "assistant"},
                                           {"content", responder_(user)}}}}});
    response.set_content(reply.dump(), "application/json");
  }

  httplib::Server server_;
  Responder responder_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::mutex mutex_;
  int fail_remaining_ = 0;
  int fail_status_ = 500;
};

// Pulls the sentence out of the prompt (between the source label line and
// the trailing target label line).
std::string sentence_of(const std::string& user_message) {
  std::size_t start = user_message.find("English:\n");
  REQUIRE(start != std::string::npos);
  start += std::string("English:\n").size();
  std::size_t end = user_message.find("\nFrench:", start);
  REQUIRE(end != std::string::npos);
  return user_message.substr(start, end - start);
}

ParallelCorpus toy_corpus(int n) {
  ParallelCorpus corpus;
  corpus.name = "toy";
  corpus.source_language = "en";
  corpus.target_language = "fr";
  for (int i = 1; i <= n; ++i) {
    Segment segment;
    segment.id = "s" + std::to_string(i);
    segment.source = "line number " + std::to_string(i);
    segment.references = {"ligne " + std::to_string(i)};
    corpus.segments.push_back(std::move(segment));
  }
  return corpus;
}

GenerationParams toy_params(const std::string& endpoint) {
  GenerationParams params;
  params.model_id = "mock-model";
  params.endpoint = endpoint;
  params.max_retries = 2;
  params.backoff_base_ms = 1;
  params.concurrency = 3;
  params.timeout_seconds = 5.0;
  return params;
}

}  // namespace

TEST_CASE("detect_refusal matches the shipped pattern list") {
  const RefusalPatterns& patterns = RefusalPatterns::builtin();

  auto hit = detect_refusal(
      "I cannot translate this content as it contains offensive language.",
      patterns);
  REQUIRE(hit.has_value());
  CHECK(*hit == "cannot_translate");

  hit = detect_refusal("I'm sorry, but I can't help with that.", patterns);
  REQUIRE(hit.has_value());
  CHECK(*hit == "apology_refusal");

  hit = detect_refusal("Je suis désolé, je ne peux pas traduire ce contenu.",
                       patterns);
  REQUIRE(hit.has_value());
  CHECK(*hit == "apology_refusal_fr");

  // Negative control: a first-person sentence with no refusal clause.
  CHECK_FALSE(detect_refusal("Je suis littéralement en train de pleurer", patterns)
                  .has_value());
  CHECK_FALSE(detect_refusal("Je ne peux pas arrêter de rire 😂", patterns)
                  .has_value());
}

TEST_CASE("extract_translation strips wrappers in order") {
  const RefusalPatterns& patterns = RefusalPatterns::builtin();

  Extraction extraction =
      extract_translation("French:\nBonjour le monde", "French", patterns);
  CHECK(extraction.status == OutputStatus::Ok);
  CHECK(extraction.text == "Bonjour le monde");

  extraction = extract_translation(
      "\"Je suis littéralement en train de pleurer et de trembler.\"", "French",
      patterns);
  CHECK(extraction.status == OutputStatus::Ok);
  CHECK(extraction.text == "Je suis littéralement en train de pleurer et de trembler.");

  extraction = extract_translation("```\nBonjour\n```", "French", patterns);
  CHECK(extraction.status == OutputStatus::Ok);
  CHECK(extraction.text == "Bonjour");

  extraction = extract_translation("Here is the translation: Bonjour", "French",
                                   patterns);
  CHECK(extraction.text == "Bonjour");

  extraction = extract_translation("Translation: «Bonjour»", "French", patterns);
  CHECK(extraction.text == "Bonjour");

  extraction = extract_translation("Voici la traduction : Salut tout le monde",
                                   "French", patterns);
  CHECK(extraction.text == "Salut tout le monde");

  // Verbose continuation after the translation line.
  extraction = extract_translation("Bonjour le monde\n\nNote: informal tone kept.",
                                   "French", patterns);
  CHECK(extraction.text == "Bonjour le monde");

  extraction = extract_translation(
      "I cannot translate this content as it contains offensive language.",
      "French", patterns);
  CHECK(extraction.status == OutputStatus::Refusal);
  CHECK(extraction.refusal_pattern == "cannot_translate");

  extraction = extract_translation("   ", "French", patterns);
  CHECK(extraction.status == OutputStatus::Empty);
  extraction = extract_translation("\"\"", "French", patterns);
  CHECK(extraction.status == OutputStatus::Empty);
}

TEST_CASE("extract_translation is idempotent") {
  const RefusalPatterns& patterns = RefusalPatterns::builtin();
  const char* cases[] = {
      "French: \"Bonjour le monde\"",
      "Translation: ```Bonjour```",
      "French:\nHere is the translation: Bonjour",
      "plain text already",
      "multi\nline\noutput",
  };
  for (const char* raw : cases) {
    Extraction first = extract_translation(raw, "French", patterns);
    if (first.status != OutputStatus::Ok) continue;
    Extraction second = extract_translation(first.text, "French", patterns);
    CAPTURE(raw);
    CHECK(second.status == OutputStatus::Ok);
    CHECK(second.text == first.text);
  }
}

TEST_CASE("run_batch translates a corpus in order against a mock endpoint") {
  MockEndpoint endpoint([](const std::string& user) {
    return "French: traduction de « " + sentence_of(user) + " »";
  });
  ParallelCorpus corpus = toy_corpus(3);
  PromptConfig config = PromptConfig::none("English", "French");
  RunResult run = run_batch(corpus, config, toy_params(endpoint.url()),
                            RefusalPatterns::builtin());

  CHECK(endpoint.requests() == 3);
  REQUIRE(run.outputs.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    CHECK(run.outputs[i].segment_id == corpus.segments[i].id);
    CHECK(run.outputs[i].status == OutputStatus::Ok);
    REQUIRE(run.outputs[i].cleaned.has_value());
    CHECK(*run.outputs[i].cleaned ==
          "traduction de « " + corpus.segments[i].source + " »");
  }
  CHECK_FALSE(run.started_at.empty());
  CHECK_FALSE(run.finished_at.empty());
}

TEST_CASE("run_batch retries transport failures with backoff") {
  MockEndpoint endpoint([](const std::string& user) {
    return "French:\n" + sentence_of(user);
  });
  endpoint.fail_next(1, 500);  // first request fails once

  ParallelCorpus corpus = toy_corpus(1);
  PromptConfig config = PromptConfig::none("English", "French");
  RunResult run = run_batch(corpus, config, toy_params(endpoint.url()),
                            RefusalPatterns::builtin());
  REQUIRE(run.outputs.size() == 1);
  CHECK(run.outputs[0].status == OutputStatus::Ok);
  CHECK(run.outputs[0].retries == 1);
  CHECK(endpoint.requests() == 2);
}

TEST_CASE("run_batch records auth failures per segment without aborting") {
  MockEndpoint endpoint([](const std::string&) { return "unused"; });
  endpoint.fail_next(1000, 401);

  ParallelCorpus corpus = toy_corpus(3);
  PromptConfig config = PromptConfig::none("English", "French");
  GenerationParams params = toy_params(endpoint.url());
  RunResult run = run_batch(corpus, config, params, RefusalPatterns::builtin());
  REQUIRE(run.outputs.size() == 3);
  for (const SegmentOutput& output : run.outputs) {
    CHECK(output.status == OutputStatus::TransportError);
    CHECK(output.raw.find("auth error") != std::string::npos);
  }
  // 401 is not retried
  CHECK(endpoint.requests() == 3);
}

TEST_CASE("run_batch flags refusals and empties") {
  MockEndpoint endpoint([](const std::string& user) -> std::string {
    std::string sentence = sentence_of(user);
    if (sentence.find("2") != std::string::npos)
      return "I cannot translate this content.";
    if (sentence.find("3") != std::string::npos) return "   ";
    return "French: ok " + sentence;
  });
  ParallelCorpus corpus = toy_corpus(3);
  PromptConfig config = PromptConfig::none("English", "French");
  RunResult run = run_batch(corpus, config, toy_params(endpoint.url()),
                            RefusalPatterns::builtin());
  CHECK(run.outputs[0].status == OutputStatus::Ok);
  CHECK(run.outputs[1].status == OutputStatus::Refusal);
  REQUIRE(run.outputs[1].refusal_reason.has_value());
  CHECK(run.outputs[2].status == OutputStatus::Empty);
}

TEST_CASE("run_batch resumes without re-requesting completed segments") {
  std::atomic<int> translated{0};
  MockEndpoint endpoint([&](const std::string& user) {
    ++translated;
    return "French:\n" + sentence_of(user);
  });
  ParallelCorpus corpus = toy_corpus(3);
  PromptConfig config = PromptConfig::none("English", "French");

  // Previous partial run: s2 done, s1 failed.
  RunResult partial;
  partial.outputs = {
      {"s1", "connection failed", std::nullopt, OutputStatus::TransportError,
       std::nullopt, 0, 2},
      {"s2", "French:\nline number 2", std::string("line number 2"),
       OutputStatus::Ok, std::nullopt, 7, 0},
  };
  auto partial_path = testutil::scratch_dir() / "partial_run.jsonl";
  save_run_jsonl(partial, partial_path);

  GenerationParams params = toy_params(endpoint.url());
  RunOptions options;
  options.resume_from = partial_path;
  RunResult run = run_batch(corpus, config, params, RefusalPatterns::builtin(),
                            options);
  CHECK(translated.load() == 2);  // s1 and s3 only
  REQUIRE(run.outputs.size() == 3);
  CHECK(run.outputs[0].status == OutputStatus::Ok);
  CHECK(run.outputs[1].status == OutputStatus::Ok);
  CHECK(run.outputs[1].latency_ms == 7);  // carried over, not re-run
  CHECK(run.outputs[2].status == OutputStatus::Ok);
}

TEST_CASE("run outputs round-trip through JSONL") {
  RunResult run;
  run.outputs = {
      {"a", "raw text", std::string("clean text"), OutputStatus::Ok, std::nullopt,
       12, 1},
      {"b", "I cannot translate this.", std::nullopt, OutputStatus::Refusal,
       std::string("cannot_translate"), 3, 0},
      {"c", "", std::nullopt, OutputStatus::Empty, std::nullopt, 0, 0},
  };
  auto path = testutil::scratch_dir() / "run_roundtrip.jsonl";
  save_run_jsonl(run, path);
  std::vector<SegmentOutput> loaded = load_run_outputs_jsonl(path);
  REQUIRE(loaded.size() == 3);
  CHECK(loaded[0].segment_id == "a");
  CHECK(loaded[0].cleaned == "clean text");
  CHECK(loaded[0].retries == 1);
  CHECK(loaded[1].status == OutputStatus::Refusal);
  CHECK(loaded[1].refusal_reason == "cannot_translate");
  CHECK(loaded[2].status == OutputStatus::Empty);
}

TEST_CASE("run_output_filename composes corpus, guidelines and model") {
  CHECK(run_output_filename("pfsmb", "none", "gemma-2-9b") ==
        "pfsmb.none.gemma-2-9b.jsonl");
  CHECK(run_output_filename("rocs-mt", "pfsmb", "m") == "rocs-mt.pfsmb.m.jsonl");
  CHECK(run_output_filename("c", "", "m") == "c.none.m.jsonl");
}
