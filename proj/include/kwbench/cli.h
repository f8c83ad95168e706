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
//
// The kwbench command line. Subcommands:
//
//   stats      corpus vocabulary statistics (JSON)
//   split      iterative-stratified or random train/dev/test split (JSON)
//   extract    ranked keywords for corpus documents (predictions JSONL)
//   evaluate   metrics for one or more prediction files (TSV and JSON)
//   report     TSV regenerated from an evaluation JSON
//   transfer   extract on plain-text files, one document per file
//   rerun      repeat the command recorded in a manifest
//
// Every file-producing command writes <output>.manifest.json holding the
// argument list and the fully resolved configuration.

#ifndef KWBENCH_CLI_H_
#define KWBENCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace kwbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);
int RunCli(int argc, const char* const* argv);

// Path of the manifest written beside `output`.
std::string ManifestPath(const std::string& output);

}  // namespace kwbench

#endif  // KWBENCH_CLI_H_
