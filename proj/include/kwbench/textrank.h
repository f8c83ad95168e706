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

#ifndef KWBENCH_TEXTRANK_H_
#define KWBENCH_TEXTRANK_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kwbench/extractors.h"

namespace kwbench {

struct TextRankParams {
  std::size_t window = 4;
  double damping = 0.85;
  double tol = 1e-6;
  std::size_t max_iter = 100;
};

// Undirected weighted graph. Nodes are distinct words in order of first
// appearance; adjacency lists are sorted by neighbour index.
struct WordGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;

  std::size_t size() const { return nodes.size(); }
  double weighted_degree(std::size_t node) const;
};

// Links non-stopword tokens that are fewer than `window` positions apart in
// the stopword-filtered token sequence. The weight counts co-occurrences;
// self-loops are skipped.
WordGraph BuildCooccurrenceGraph(const std::vector<Token>& tokens,
                                 std::size_t window);

struct PageRankResult {
  std::vector<double> scores;
  std::size_t iterations = 0;
  double last_delta = 0;
  bool converged = false;
};

// Synchronous power iteration of
//   s(v) = (1 - d) / |V| + d * sum_{u ~ v} s(u) * w(u, v) / deg_w(u)
// from the uniform vector, stopping once the largest per-node change drops
// below tol or after max_iter sweeps.
PageRankResult PageRank(const WordGraph& graph, double damping, double tol,
                        std::size_t max_iter);

// Largest |s(v) - rhs(v)| of the fixed-point equation above.
double PageRankResidual(const WordGraph& graph,
                        const std::vector<double>& scores, double damping);

// Phrase candidates (stopword-free runs and sub-spans) scored by the sum of
// their words' PageRank scores.
RankedPrediction TextRankRank(const Document& doc,
                              const ExtractOptions& options,
                              const TextRankParams& params, std::size_t k);

}  // namespace kwbench

#endif  // KWBENCH_TEXTRANK_H_
