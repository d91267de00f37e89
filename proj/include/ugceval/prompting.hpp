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

#ifndef UGCEVAL_PROMPTING_HPP_
#define UGCEVAL_PROMPTING_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "ugceval/corpus.hpp"

namespace ugceval {

// One prompting configuration: no guidelines, a built-in set, or a custom
// set, plus the language display names spliced into the template
// (capitalized English exonyms such as "English", "French", "German").
class PromptConfig {
 public:
  static PromptConfig none(std::string source_language, std::string target_language);
  static PromptConfig builtin(std::string name, std::string source_language,
                              std::string target_language);
  static PromptConfig custom(GuidelineSet set, std::string source_language,
                             std::string target_language);

  bool has_guidelines() const { return guideline_name_ != "none"; }
  // "none", a built-in name, or the custom set's name.
  const std::string& guideline_name() const { return guideline_name_; }
  const std::optional<GuidelineSet>& custom_set() const { return custom_; }
  const std::string& source_language() const { return source_language_; }
  const std::string& target_language() const { return target_language_; }

 private:
  PromptConfig(std::string name, std::optional<GuidelineSet> custom,
               std::string source_language, std::string target_language);

  std::string guideline_name_;
  std::optional<GuidelineSet> custom_;
  std::string source_language_;
  std::string target_language_;
};

struct ChatPrompt {
  std::string system;
  std::string user;
};

// The twelve numbered instructions for a built-in set, space-separated as a
// single block (the form spliced into prompts). Byte-stable; golden-file
// tested. Throws UnknownGuidelineSet.
std::string render_builtin_guideline_text(std::string_view name);

// Renders an arbitrary guideline set through a fixed (kind x action)
// sentence bank consistent with the built-in instruction wording.
// Exception flags select the footnote phrasings.
std::string render_custom_guideline_text(const GuidelineSet& set);

// Instantiates the chat template for one source line. Without guidelines
// the guideline preamble sentence is dropped and the rest kept verbatim.
// The user message ends with "<target language>:\n" where the model's
// output goes. Throws MultiLineInput if `sentence` spans lines.
ChatPrompt build_prompt(const PromptConfig& config, std::string_view sentence);

}  // namespace ugceval

#endif  // UGCEVAL_PROMPTING_HPP_
