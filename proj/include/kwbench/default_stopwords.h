// Copyright 2026 The kwbench Authors.
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

#ifndef KWBENCH_DEFAULT_STOPWORDS_H_
#define KWBENCH_DEFAULT_STOPWORDS_H_

#include <string>
#include <vector>

namespace kwbench {
namespace internal {

// Bundled function-word lists, already ASCII-folded.
const std::vector<std::string>& PolishStopwords();
const std::vector<std::string>& EnglishStopwords();

}  // namespace internal
}  // namespace kwbench

#endif  // KWBENCH_DEFAULT_STOPWORDS_H_
