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

#include "kwbench/textrank.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "kwbench/errors.h"

namespace kwbench {
namespace {

void CheckParams(const TextRankParams& params) {
  if (params.window < 2) throw UsageError("TextRank window must be >= 2");
  if (!(params.damping > 0 && params.damping < 1)) {
    throw UsageError("TextRank damping must be in (0, 1)");
  }
  if (!(params.tol > 0)) throw UsageError("TextRank tolerance must be > 0");
}

}  // namespace

double WordGraph::weighted_degree(std::size_t node) const {
  double sum = 0;
  for (const auto& [neighbour, weight] : adjacency[node]) sum += weight;
  return sum;
}

WordGraph BuildCooccurrenceGraph(const std::vector<Token>& tokens,
                                 std::size_t window) {
  WordGraph graph;
  std::unordered_map<std::string, std::size_t> node_of;
  std::vector<std::size_t> sequence;
  for (const auto& t : tokens) {
    if (t.is_stopword) continue;
    const auto [it, inserted] = node_of.emplace(t.text, graph.nodes.size());
    if (inserted) graph.nodes.push_back(t.text);
    sequence.push_back(it->second);
  }

  std::vector<std::map<std::size_t, double>> edges(graph.nodes.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size() && j - i < window; ++j) {
      const std::size_t a = sequence[i];
      const std::size_t b = sequence[j];
      if (a == b) continue;
      edges[a][b] += 1.0;
      edges[b][a] += 1.0;
    }
  }
  graph.adjacency.resize(graph.nodes.size());
  for (std::size_t v = 0; v < edges.size(); ++v) {
    graph.adjacency[v].assign(edges[v].begin(), edges[v].end());
  }
  return graph;
}

PageRankResult PageRank(const WordGraph& graph, double damping, double tol,
                        std::size_t max_iter) {
  PageRankResult result;
  const std::size_t n = graph.size();
  if (n == 0) {
    result.converged = true;
    return result;
  }
  std::vector<double> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.weighted_degree(v);

  const double base = (1.0 - damping) / static_cast<double>(n);
  std::vector<double> scores(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double delta = 0;
    for (std::size_t v = 0; v < n; ++v) {
      double sum = 0;
      for (const auto& [u, weight] : graph.adjacency[v]) {
        sum += scores[u] * weight / degree[u];
      }
      next[v] = base + damping * sum;
      delta = std::max(delta, std::abs(next[v] - scores[v]));
    }
    scores.swap(next);
    result.iterations = iter + 1;
    result.last_delta = delta;
    if (delta < tol) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(scores);
  return result;
}

double PageRankResidual(const WordGraph& graph,
                        const std::vector<double>& scores, double damping) {
  const std::size_t n = graph.size();
  if (n == 0) return 0;
  const double base = (1.0 - damping) / static_cast<double>(n);
  double worst = 0;
  for (std::size_t v = 0; v < n; ++v) {
    double sum = 0;
    for (const auto& [u, weight] : graph.adjacency[v]) {
      sum += scores[u] * weight / graph.weighted_degree(u);
    }
    worst = std::max(worst, std::abs(scores[v] - (base + damping * sum)));
  }
  return worst;
}

RankedPrediction TextRankRank(const Document& doc,
                              const ExtractOptions& options,
                              const TextRankParams& params, std::size_t k) {
  CheckParams(params);
  if (k < 1) throw UsageError("k must be at least 1");
  const auto tokens = TokenizeDocument(doc, options);
  const WordGraph graph = BuildCooccurrenceGraph(tokens, params.window);
  if (graph.size() == 0) return {doc.id, "textrank", {}};

  const PageRankResult rank =
      PageRank(graph, params.damping, params.tol, params.max_iter);
  std::unordered_map<std::string_view, double> word_score;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    word_score.emplace(graph.nodes[v], rank.scores[v]);
  }

  std::vector<ScoredKeyword> scored;
  for (const auto& c : ChunkNounPhrases(tokens, options.max_len)) {
    double sum = 0;
    for (const auto& word : c.tokens) sum += word_score.at(word);
    scored.push_back({c.normalized_form, sum});
  }
  return MakePrediction(doc.id, "textrank", std::move(scored), k);
}

}  // namespace kwbench
