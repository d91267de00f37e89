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

#ifndef UGCEVAL_DATA_PATHS_HPP_
#define UGCEVAL_DATA_PATHS_HPP_

#include <filesystem>

namespace ugceval {

// Root of the shipped data files (lexicons, wordlists, refusal patterns).
// $UGCEVAL_DATA overrides the compiled-in source-tree default.
std::filesystem::path data_dir();

}  // namespace ugceval

#endif  // UGCEVAL_DATA_PATHS_HPP_
