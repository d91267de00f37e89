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

#include "ugceval/data_paths.hpp"

#include <cstdlib>

#ifndef UGCEVAL_DATA_DIR
#define UGCEVAL_DATA_DIR "data"
#endif

namespace ugceval {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("UGCEVAL_DATA"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(UGCEVAL_DATA_DIR);
}

}  // namespace ugceval
