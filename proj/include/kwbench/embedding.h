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
// Embedding-based keyword extraction in the style of KeyBERT: candidates and
// the document are embedded, ranked by cosine similarity to the document,
// and diversified with Maximal Marginal Relevance or Max Sum Similarity.
//
// Vectors come from a static word-vector file
//
//   <count> <dim>
//   <token> <f1> ... <fdim>
//
// optionally overridden by precomputed document/phrase vectors stored as
// JSONL records {"key": "...", "vector": [...]}. Document vectors are keyed
// by document id, phrase vectors by normalized phrase text.

#ifndef KWBENCH_EMBEDDING_H_
#define KWBENCH_EMBEDDING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kwbench/extractors.h"

namespace kwbench {

using Vector = std::vector<double>;

class EmbeddingProvider {
 public:
  explicit EmbeddingProvider(std::size_t dimension)
      : dimension_(dimension), zero_(dimension, 0.0) {}

  // Throws DataError on malformed lines or dimension mismatches.
  static EmbeddingProvider LoadVectorFile(const std::string& path);
  void LoadPrecomputed(const std::string& path);

  // Token keys are normalized; the first vector for a key wins.
  void AddToken(const std::string& token, Vector vector);
  void AddPrecomputed(const std::string& key, Vector vector);

  std::size_t dimension() const { return dimension_; }
  std::size_t vocabulary_size() const { return tokens_.size(); }

  // Unknown tokens are absent unless zero fallback is on, in which case
  // they map to the zero vector.
  void set_zero_fallback(bool on) { zero_fallback_ = on; }
  bool zero_fallback() const { return zero_fallback_; }

  std::optional<std::span<const double>> token(const std::string& normalized) const;
  std::optional<std::span<const double>> precomputed(const std::string& key) const;

 private:
  void CheckDimension(const Vector& vector, const std::string& key) const;

  std::size_t dimension_;
  bool zero_fallback_ = false;
  Vector zero_;
  std::unordered_map<std::string, Vector> tokens_;
  std::unordered_map<std::string, Vector> precomputed_;
};

// Mean vector of the known non-stopword tokens of `text`; absent if none is
// known.
std::optional<Vector> EmbedText(const std::string& text,
                                const EmbeddingProvider& provider,
                                const StopwordList& stopwords);

// Cosine similarity clamped to [-1, 1]; 0 when either vector has zero norm.
double Cosine(std::span<const double> a, std::span<const double> b);

struct SimilarityMatrix {
  std::vector<std::string> candidates;
  std::vector<double> doc_sims;
  std::vector<double> pairwise;  // row-major, symmetric, unit diagonal
  std::size_t zero_norm_vectors = 0;

  std::size_t size() const { return candidates.size(); }
  double pair(std::size_t i, std::size_t j) const {
    return pairwise[i * candidates.size() + j];
  }
};

SimilarityMatrix BuildSimilarityMatrix(std::span<const double> document,
                                       std::vector<std::string> candidates,
                                       const std::vector<Vector>& vectors);

// Greedy MMR. Returns candidate indices in selection order.
std::vector<std::size_t> MmrSelect(const SimilarityMatrix& sims, std::size_t k,
                                   double diversity);

inline constexpr std::size_t kDefaultMssPool = 20;
inline constexpr std::size_t kMaxMssSubsets = 200000;

struct MssResult {
  std::vector<std::size_t> selected;  // ordered by doc_sim descending
  bool exhaustive = true;             // false if the greedy fallback ran
};

// Among the top-`pool` candidates by doc_sim, the k-subset with the
// smallest sum of pairwise similarities; ties prefer the larger total
// doc_sim, then the lexicographically smaller name list.
MssResult MssSelect(const SimilarityMatrix& sims, std::size_t k,
                    std::size_t pool);

enum class DiversityMode { kMmr, kMss };

struct KeyBertParams {
  std::size_t n_min = 1;
  std::size_t n_max = 2;
  DiversityMode mode = DiversityMode::kMmr;
  double diversity = 0.7;
  std::size_t pool = kDefaultMssPool;
};

struct KeyBertResult {
  RankedPrediction prediction;
  std::vector<std::string> warnings;
};

// Selected candidates are reported with their document similarity as score.
KeyBertResult KeyBertRank(const Document& doc,
                          const EmbeddingProvider& provider,
                          const ExtractOptions& options,
                          const KeyBertParams& params, std::size_t k);

}  // namespace kwbench

#endif  // KWBENCH_EMBEDDING_H_
