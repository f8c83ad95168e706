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

#include "kwbench/embedding.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kwbench/errors.h"

namespace kwbench {
namespace {

double Norm(std::span<const double> v) {
  double sum = 0;
  for (const double x : v) sum += x * x;
  return std::sqrt(sum);
}

// Candidate indices ordered by doc_sim descending, names ascending on ties.
std::vector<std::size_t> ByDocSim(const SimilarityMatrix& sims) {
  std::vector<std::size_t> order(sims.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sims.doc_sims[a] != sims.doc_sims[b]) {
      return sims.doc_sims[a] > sims.doc_sims[b];
    }
    return sims.candidates[a] < sims.candidates[b];
  });
  return order;
}

// C(n, k) saturated at `limit` + 1.
std::size_t BoundedBinomial(std::size_t n, std::size_t k, std::size_t limit) {
  k = std::min(k, n - k);
  double value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (value > static_cast<double>(limit)) return limit + 1;
  }
  return static_cast<std::size_t>(std::llround(value));
}

std::vector<std::string> Words(const std::string& form) {
  std::vector<std::string> out;
  std::istringstream in(form);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

}  // namespace

void EmbeddingProvider::CheckDimension(const Vector& vector,
                                       const std::string& key) const {
  if (vector.size() != dimension_) {
    throw DataError("vector for \"" + key + "\" has " +
                    std::to_string(vector.size()) + " components, expected " +
                    std::to_string(dimension_));
  }
}

void EmbeddingProvider::AddToken(const std::string& token, Vector vector) {
  CheckDimension(vector, token);
  std::string key = NormalizeKeyword(token);
  if (key.empty()) return;
  tokens_.emplace(std::move(key), std::move(vector));
}

void EmbeddingProvider::AddPrecomputed(const std::string& key, Vector vector) {
  CheckDimension(vector, key);
  precomputed_.emplace(key, std::move(vector));
}

EmbeddingProvider EmbeddingProvider::LoadVectorFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open vector file: " + path);
  std::string line;
  std::size_t count = 0;
  std::size_t dimension = 0;
  if (!std::getline(in, line)) throw DataError(path + ": empty vector file");
  {
    std::istringstream header(line);
    if (!(header >> count >> dimension) || dimension == 0) {
      throw DataError(path + ": header must be \"<count> <dim>\"");
    }
  }
  EmbeddingProvider provider(dimension);
  std::size_t line_number = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(line_number);
    std::size_t pos = line.find_first_not_of(' ');
    std::size_t end = line.find(' ', pos);
    if (end == std::string::npos) throw DataError(where + ": no vector values");
    const std::string token = line.substr(pos, end - pos);
    Vector values;
    values.reserve(dimension);
    pos = end;
    while (true) {
      pos = line.find_first_not_of(' ', pos);
      if (pos == std::string::npos) break;
      double value = 0;
      const auto [ptr, ec] =
          std::from_chars(line.data() + pos, line.data() + line.size(), value);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ')) {
        throw DataError(where + ": malformed number");
      }
      values.push_back(value);
      pos = static_cast<std::size_t>(ptr - line.data());
    }
    if (values.size() != dimension) {
      throw DataError(where + ": dimension mismatch (" +
                      std::to_string(values.size()) + " values, header says " +
                      std::to_string(dimension) + ")");
    }
    provider.AddToken(token, std::move(values));
    ++rows;
  }
  if (rows != count) {
    throw DataError(path + ": header announces " + std::to_string(count) +
                    " vectors but file has " + std::to_string(rows));
  }
  return provider;
}

void EmbeddingProvider::LoadPrecomputed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open precomputed vector file: " + path);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      AddPrecomputed(record.at("key").get<std::string>(),
                     record.at("vector").get<Vector>());
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ":" + std::to_string(line_number) + ": " +
                      e.what());
    } catch (const DataError& e) {
      throw DataError(path + ":" + std::to_string(line_number) + ": " +
                      e.what());
    }
  }
}

std::optional<std::span<const double>> EmbeddingProvider::token(
    const std::string& normalized) const {
  const auto it = tokens_.find(normalized);
  if (it != tokens_.end()) return std::span<const double>(it->second);
  if (zero_fallback_) return std::span<const double>(zero_);
  return std::nullopt;
}

std::optional<std::span<const double>> EmbeddingProvider::precomputed(
    const std::string& key) const {
  const auto it = precomputed_.find(key);
  if (it == precomputed_.end()) return std::nullopt;
  return std::span<const double>(it->second);
}

std::optional<Vector> EmbedText(const std::string& text,
                                const EmbeddingProvider& provider,
                                const StopwordList& stopwords) {
  Vector sum(provider.dimension(), 0.0);
  std::size_t known = 0;
  for (const auto& token : Tokenize(text, stopwords)) {
    if (token.is_stopword) continue;
    const auto v = provider.token(token.text);
    if (!v) continue;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
    ++known;
  }
  if (known == 0) return std::nullopt;
  for (double& x : sum) x /= static_cast<double>(known);
  return sum;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  const double na = Norm(a);
  const double nb = Norm(b);
  if (na == 0 || nb == 0) return 0;
  double dot = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

SimilarityMatrix BuildSimilarityMatrix(std::span<const double> document,
                                       std::vector<std::string> candidates,
                                       const std::vector<Vector>& vectors) {
  SimilarityMatrix sims;
  const std::size_t n = candidates.size();
  sims.candidates = std::move(candidates);
  sims.doc_sims.resize(n);
  sims.pairwise.assign(n * n, 0.0);
  if (Norm(document) == 0) ++sims.zero_norm_vectors;
  for (std::size_t i = 0; i < n; ++i) {
    if (Norm(vectors[i]) == 0) ++sims.zero_norm_vectors;
    sims.doc_sims[i] = Cosine(vectors[i], document);
    sims.pairwise[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = Cosine(vectors[i], vectors[j]);
      sims.pairwise[i * n + j] = s;
      sims.pairwise[j * n + i] = s;
    }
  }
  return sims;
}

std::vector<std::size_t> MmrSelect(const SimilarityMatrix& sims, std::size_t k,
                                   double diversity) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (!(diversity >= 0 && diversity <= 1)) {
    throw UsageError("diversity must be in [0, 1]");
  }
  const std::size_t n = sims.size();
  std::vector<std::size_t> selected;
  std::vector<bool> taken(n, false);
  // Highest similarity to any selected candidate so far.
  std::vector<double> redundancy(n, -std::numeric_limits<double>::infinity());
  while (selected.size() < std::min(k, n)) {
    std::size_t best = n;
    double best_score = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (taken[c]) continue;
      const double score =
          selected.empty()
              ? sims.doc_sims[c]
              : (1.0 - diversity) * sims.doc_sims[c] - diversity * redundancy[c];
      if (best == n || score > best_score ||
          (score == best_score && sims.candidates[c] < sims.candidates[best])) {
        best = c;
        best_score = score;
      }
    }
    taken[best] = true;
    selected.push_back(best);
    for (std::size_t c = 0; c < n; ++c) {
      redundancy[c] = std::max(redundancy[c], sims.pair(c, best));
    }
  }
  return selected;
}

MssResult MssSelect(const SimilarityMatrix& sims, std::size_t k,
                    std::size_t pool) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (pool < k) throw UsageError("MSS pool must be at least k");
  MssResult result;
  std::vector<std::size_t> top = ByDocSim(sims);
  if (top.size() > pool) top.resize(pool);
  if (top.size() <= k) {
    result.selected = std::move(top);
    return result;
  }

  auto names = [&](const std::vector<std::size_t>& subset) {
    std::vector<std::string_view> out;
    for (const std::size_t i : subset) out.push_back(sims.candidates[i]);
    return out;
  };

  if (BoundedBinomial(top.size(), k, kMaxMssSubsets) <= kMaxMssSubsets) {
    // `top` is in doc_sim order, so index combinations in increasing order
    // yield subsets already sorted for output.
    std::vector<std::size_t> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    std::vector<std::size_t> best;
    double best_pair = 0;
    double best_relevance = 0;
    std::vector<std::size_t> subset(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) subset[i] = top[combo[i]];
      double pair_sum = 0;
      double relevance = 0;
      for (std::size_t i = 0; i < k; ++i) {
        relevance += sims.doc_sims[subset[i]];
        for (std::size_t j = i + 1; j < k; ++j) {
          pair_sum += sims.pair(subset[i], subset[j]);
        }
      }
      const bool better =
          best.empty() || pair_sum < best_pair ||
          (pair_sum == best_pair &&
           (relevance > best_relevance ||
            (relevance == best_relevance && names(subset) < names(best))));
      if (better) {
        best = subset;
        best_pair = pair_sum;
        best_relevance = relevance;
      }
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == top.size() - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    result.selected = std::move(best);
    return result;
  }

  result.exhaustive = false;
  std::vector<std::size_t> chosen = {top.front()};
  std::vector<bool> taken(top.size(), false);
  taken[0] = true;
  while (chosen.size() < k) {
    std::size_t best = top.size();
    double best_cost = 0;
    for (std::size_t t = 0; t < top.size(); ++t) {
      if (taken[t]) continue;
      double cost = 0;
      for (const std::size_t s : chosen) cost += sims.pair(top[t], s);
      // Equal cost keeps the earlier entry: higher doc_sim, then name.
      if (best == top.size() || cost < best_cost) {
        best = t;
        best_cost = cost;
      }
    }
    taken[best] = true;
    chosen.push_back(top[best]);
  }
  std::vector<std::size_t> ordered;
  for (std::size_t t = 0; t < top.size(); ++t) {
    if (taken[t]) ordered.push_back(top[t]);
  }
  result.selected = std::move(ordered);
  return result;
}

KeyBertResult KeyBertRank(const Document& doc,
                          const EmbeddingProvider& provider,
                          const ExtractOptions& options,
                          const KeyBertParams& params, std::size_t k) {
  if (k < 1) throw UsageError("k must be at least 1");
  KeyBertResult result;
  result.prediction = {doc.id, "keybert", {}};

  std::optional<Vector> doc_vector;
  if (const auto pre = provider.precomputed(doc.id)) {
    doc_vector = Vector(pre->begin(), pre->end());
  } else {
    doc_vector = EmbedText(DocumentText(doc, options.use_lemmas), provider,
                           *options.stopwords);
  }
  if (!doc_vector) {
    result.warnings.push_back("document \"" + doc.id +
                              "\" has no known tokens; no prediction");
    return result;
  }

  std::vector<std::string> names;
  std::vector<Vector> vectors;
  const auto candidates = GenerateNgramCandidates(
      TokenizeDocument(doc, options), params.n_min, params.n_max);
  for (const auto& c : candidates) {
    if (const auto pre = provider.precomputed(c.normalized_form)) {
      names.push_back(c.normalized_form);
      vectors.emplace_back(pre->begin(), pre->end());
      continue;
    }
    Vector sum(provider.dimension(), 0.0);
    bool known = true;
    for (const auto& word : Words(c.normalized_form)) {
      const auto v = provider.token(word);
      if (!v) {
        known = false;
        break;
      }
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
    }
    if (!known) continue;
    for (double& x : sum) x /= static_cast<double>(c.length());
    names.push_back(c.normalized_form);
    vectors.push_back(std::move(sum));
  }

  const SimilarityMatrix sims =
      BuildSimilarityMatrix(*doc_vector, std::move(names), vectors);
  if (sims.zero_norm_vectors > 0) {
    result.warnings.push_back("document \"" + doc.id + "\": " +
                              std::to_string(sims.zero_norm_vectors) +
                              " zero-norm vector(s) given similarity 0");
  }
  if (sims.size() == 0) return result;

  std::vector<std::size_t> selected;
  if (params.mode == DiversityMode::kMmr) {
    selected = MmrSelect(sims, k, params.diversity);
  } else {
    const MssResult mss = MssSelect(sims, k, std::max(params.pool, k));
    if (!mss.exhaustive) {
      result.warnings.push_back("document \"" + doc.id +
                                "\": MSS subset space too large, used greedy "
                                "selection");
    }
    selected = mss.selected;
  }
  std::vector<ScoredKeyword> scored;
  for (const std::size_t i : selected) {
    scored.push_back({sims.candidates[i], sims.doc_sims[i]});
  }
  result.prediction = MakePrediction(doc.id, "keybert", std::move(scored));
  return result;
}

}  // namespace kwbench
