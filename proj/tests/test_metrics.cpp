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

#include <cmath>
#include <json.hpp>

#include "support/bleu_oracle.hpp"
#include "support/test_util.hpp"
#include "ugceval/errors.hpp"
#include "ugceval/metrics.hpp"

using namespace ugceval;
using nlohmann::json;
using testutil::Tokens;
using testutil::oracle_corpus_bleu;

namespace {

json load_fixture(const char* name) {
  return json::parse(testutil::slurp(testutil::fixture_dir() / name));
}

double single_pair_bleu(const std::string& hyp, const std::string& ref) {
  std::vector<std::string> hyps = {hyp};
  std::vector<std::vector<std::string>> refs = {{ref}};
  return corpus_bleu(hyps, refs).score;
}

RunResult fake_run(std::vector<SegmentOutput> outputs) {
  RunResult run;
  run.corpus_name = "toy";
  run.outputs = std::move(outputs);
  return run;
}

SegmentOutput make_output(std::string id, OutputStatus status,
                          std::string cleaned = "") {
  SegmentOutput output;
  output.segment_id = std::move(id);
  output.status = status;
  if (status == OutputStatus::Ok) output.cleaned = std::move(cleaned);
  if (status == OutputStatus::Refusal) output.refusal_reason = "apology_refusal";
  return output;
}

}  // namespace

TEST_CASE("tokenize_13a matches the reference goldens byte for byte") {
  json cases = load_fixture("tokenizer_13a_goldens.json");
  REQUIRE(cases.size() >= 25);
  for (const auto& item : cases) {
    std::string text = item["text"].get<std::string>();
    CAPTURE(text);
    std::vector<std::string> expected =
        item["tokens"].get<std::vector<std::string>>();
    CHECK(tokenize_13a(text) == expected);
  }
}

TEST_CASE("tokenize_13a spec examples") {
  CHECK(tokenize_13a("Hello, world!") ==
        std::vector<std::string>{"Hello", ",", "world", "!"});
  CHECK(tokenize_13a("").empty());
}

TEST_CASE("corpus_bleu matches the reference goldens to 4 decimals") {
  json goldens = load_fixture("bleu_goldens.json");
  REQUIRE(goldens["corpus"].size() >= 20);
  for (const auto& item : goldens["corpus"]) {
    std::string name = item["name"].get<std::string>();
    CAPTURE(name);
    std::vector<std::string> hyps = item["hyps"].get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> refs =
        item["refs"].get<std::vector<std::vector<std::string>>>();
    BleuScore score = corpus_bleu(hyps, refs);
    CHECK_NEAR(score.score, item["score"].get<double>(), 1e-4);
    CHECK(score.hyp_len == item["sys_len"].get<std::size_t>());
    CHECK(score.ref_len == item["ref_len"].get<std::size_t>());
    CHECK_NEAR(score.brevity_penalty, item["bp"].get<double>(), 1e-6);
    for (int n = 0; n < 4; ++n) {
      CHECK(score.correct[n] == item["correct"][n].get<std::size_t>());
      CHECK(score.total[n] == item["total"][n].get<std::size_t>());
      CHECK_NEAR(score.precisions[n], item["precisions"][n].get<double>() / 100.0,
                 1e-7);
    }
  }
}

TEST_CASE("sentence_bleu matches the reference goldens to 4 decimals") {
  json goldens = load_fixture("bleu_goldens.json");
  REQUIRE(goldens["sentence"].size() >= 12);
  for (const auto& item : goldens["sentence"]) {
    std::string name = item["name"].get<std::string>();
    CAPTURE(name);
    std::string hyp = item["hyp"].get<std::string>();
    std::vector<std::string> refs = item["refs"].get<std::vector<std::string>>();
    BleuScore score = sentence_bleu(hyp, refs);
    CHECK_NEAR(score.score, item["score"].get<double>(), 1e-4);
  }
}

TEST_CASE("corpus_bleu trivial cases") {
  std::vector<std::string> hyps = {"the cat sat on the mat"};
  std::vector<std::vector<std::string>> refs = {{"the cat sat on the mat"}};
  CHECK_NEAR(corpus_bleu(hyps, refs).score, 100.0, 1e-9);

  std::vector<std::string> empty_hyps = {"", ""};
  std::vector<std::vector<std::string>> two_refs = {{"a b c d e"}, {"f g h i j"}};
  BleuScore zero = corpus_bleu(empty_hyps, two_refs);
  CHECK(zero.score == 0.0);
  CHECK(zero.hyp_len == 0);

  CHECK_THROWS_AS(corpus_bleu(std::vector<std::string>{},
                              std::vector<std::vector<std::string>>{}),
                  LengthMismatch);
  CHECK_THROWS_AS(corpus_bleu(hyps, two_refs), LengthMismatch);
}

TEST_CASE("sentence_bleu trivial cases") {
  std::vector<std::string> same = {"good game tonight friends"};
  CHECK_NEAR(sentence_bleu("good game tonight friends", same).score, 100.0, 1e-9);
  std::vector<std::string> any = {"a reference"};
  CHECK(sentence_bleu("", any).score == 0.0);
}

TEST_CASE("corpus_bleu equals the brute-force oracle on random instances") {
  static const char* kVocab[] = {"the", "cat", "dog", "sat", "ran",  "on",
                                 "mat", "rug", "big", "was", "here", "now"};
  testutil::Rng rng(20260810);
  for (int iteration = 0; iteration < 1000; ++iteration) {
    std::size_t sentences = 1 + rng.below(5);
    std::vector<Tokens> hyps;
    std::vector<std::vector<Tokens>> refs;
    for (std::size_t s = 0; s < sentences; ++s) {
      Tokens hyp;
      std::size_t hyp_len = rng.below(13);  // 0..12 tokens
      for (std::size_t i = 0; i < hyp_len; ++i)
        hyp.push_back(kVocab[rng.below(12)]);
      std::vector<Tokens> ref_set;
      std::size_t ref_count = 1 + rng.below(2);
      for (std::size_t r = 0; r < ref_count; ++r) {
        Tokens ref;
        std::size_t ref_len = 1 + rng.below(12);
        for (std::size_t i = 0; i < ref_len; ++i)
          ref.push_back(kVocab[rng.below(12)]);
        ref_set.push_back(std::move(ref));
      }
      hyps.push_back(std::move(hyp));
      refs.push_back(std::move(ref_set));
    }

    std::vector<std::string> hyp_lines;
    std::vector<std::vector<std::string>> ref_lines;
    for (std::size_t s = 0; s < sentences; ++s) {
      hyp_lines.push_back(testutil::join_tokens(hyps[s]));
      std::vector<std::string> lines;
      for (const Tokens& ref : refs[s]) lines.push_back(testutil::join_tokens(ref));
      ref_lines.push_back(std::move(lines));
    }

    std::array<std::size_t, 4> oracle_correct{}, oracle_total{};
    double expected = oracle_corpus_bleu(hyps, refs, &oracle_correct, &oracle_total);
    BleuScore actual = corpus_bleu(hyp_lines, ref_lines);
    CAPTURE(iteration);
    REQUIRE(actual.correct == oracle_correct);
    REQUIRE(actual.total == oracle_total);
    REQUIRE_NEAR(actual.score, expected, 1e-9);
  }
}

TEST_CASE("corpus_bleu is invariant under joint permutation of pairs") {
  std::vector<std::string> hyps = {"the cat sat on the mat", "a big dog ran here",
                                   "now it was quiet again tonight"};
  std::vector<std::vector<std::string>> refs = {{"the cat sat on a mat"},
                                                {"the big dog ran there"},
                                                {"then it was quiet again tonight"}};
  double base = corpus_bleu(hyps, refs).score;
  std::vector<std::size_t> order = {2, 0, 1};
  std::vector<std::string> hyps2;
  std::vector<std::vector<std::string>> refs2;
  for (std::size_t i : order) {
    hyps2.push_back(hyps[i]);
    refs2.push_back(refs[i]);
  }
  CHECK_NEAR(corpus_bleu(hyps2, refs2).score, base, 1e-12);
}

TEST_CASE("deleting a fully matched token never raises corpus BLEU") {
  struct Case {
    std::string hyp, shorter, ref;
  } cases[] = {
      {"the cat sat on the mat today", "the cat sat on the mat",
       "the cat sat on the mat today"},
      {"a big dog ran here fast", "a big dog ran here", "a big dog ran here fast"},
      {"one two three four five six", "one two three four five",
       "one two three four five six"},
  };
  for (const Case& test_case : cases) {
    double full = single_pair_bleu(test_case.hyp, test_case.ref);
    double shorter = single_pair_bleu(test_case.shorter, test_case.ref);
    CHECK(shorter <= full + 1e-12);
  }
}

TEST_CASE("sentence_bleu of a line against itself is 100") {
  static const char* kVocab[] = {"yes", "no",  "oui", "non", "gut",
                                 "ja",  "bon", "top", "wow", "ok"};
  testutil::Rng rng(42);
  for (int iteration = 0; iteration < 200; ++iteration) {
    Tokens tokens;
    std::size_t len = 1 + rng.below(10);
    for (std::size_t i = 0; i < len; ++i) tokens.push_back(kVocab[rng.below(10)]);
    std::string line = testutil::join_tokens(tokens);
    CAPTURE(line);
    std::vector<std::string> refs = {line};
    CHECK_NEAR(sentence_bleu(line, refs).score, 100.0, 1e-9);
  }
}

TEST_CASE("ingest_external_scores applies the empty-output zero rule") {
  RunResult run = fake_run({
      make_output("s1", OutputStatus::Ok, "bonjour"),
      make_output("s2", OutputStatus::Refusal),
      make_output("s3", OutputStatus::Ok, "salut"),
  });
  auto path = testutil::write_temp("scores1.tsv",
                                   "s1\t0.81\ns2\t0.92\ns3\t0.77\n");
  ScoreIngest ingest = ingest_external_scores(path, "external:comet22", run);
  REQUIRE(ingest.scores.size() == 3);
  CHECK(ingest.missing_ids.empty());
  CHECK_NEAR(ingest.scores[0].value, 0.81, 1e-12);
  CHECK_FALSE(ingest.scores[0].zeroed);
  CHECK(ingest.scores[1].value == 0.0);
  CHECK(ingest.scores[1].zeroed);
  CHECK(ingest.scores[2].metric_name == "external:comet22");

  // mean x 100 percentage convention
  CHECK_NEAR(corpus_average_pct(ingest.scores),
             100.0 * (0.81 + 0.0 + 0.77) / 3.0, 1e-9);
}

TEST_CASE("ingest_external_scores reports subsets and rejects unknown ids") {
  RunResult run = fake_run({
      make_output("s1", OutputStatus::Ok, "a"),
      make_output("s2", OutputStatus::Ok, "b"),
      make_output("s3", OutputStatus::Ok, "c"),
  });
  auto subset = testutil::write_temp("scores2.tsv", "s1\t0.5\ns3\t0.7\n");
  ScoreIngest ingest = ingest_external_scores(subset, "external:cometkiwi", run);
  CHECK(ingest.scores.size() == 2);
  REQUIRE(ingest.missing_ids.size() == 1);
  CHECK(ingest.missing_ids[0] == "s2");

  auto unknown = testutil::write_temp("scores3.tsv", "zz\t0.5\n");
  CHECK_THROWS_AS(ingest_external_scores(unknown, "external:comet22", run),
                  UnknownSegmentId);

  auto non_numeric = testutil::write_temp("scores4.tsv", "s1\tabc\n");
  CHECK_THROWS_AS(ingest_external_scores(non_numeric, "external:comet22", run),
                  NonNumericScore);
}
