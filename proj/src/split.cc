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

#include "kwbench/split.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <unordered_map>

#include "kwbench/errors.h"

namespace kwbench {
namespace {

using nlohmann::json;

// Demands are fractional; treat values this close as tied.
constexpr double kTieEpsilon = 1e-9;
constexpr std::size_t kMaxRefinePasses = 100;

// Distinct normalized labels of every document, as indices into a sorted
// label table.
struct LabelIndex {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> doc_labels;
  std::vector<std::vector<std::size_t>> label_docs;
};

LabelIndex BuildLabelIndex(const std::vector<Document>& docs) {
  std::set<std::string> all;
  for (const auto& doc : docs) {
    for (const auto& k : doc.keywords) all.insert(k.normalized);
  }
  LabelIndex index;
  index.labels.assign(all.begin(), all.end());
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < index.labels.size(); ++i) {
    position.emplace(index.labels[i], i);
  }
  index.doc_labels.resize(docs.size());
  index.label_docs.resize(index.labels.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    auto& labels = index.doc_labels[d];
    for (const auto& k : docs[d].keywords) labels.push_back(position.at(k.normalized));
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (const std::size_t l : labels) index.label_docs[l].push_back(d);
  }
  return index;
}

void CheckIds(const std::vector<Document>& docs) {
  if (docs.empty()) throw UsageError("cannot split an empty corpus");
  std::set<std::string_view> ids;
  for (const auto& doc : docs) {
    if (!ids.insert(doc.id).second) {
      throw DataError("duplicate document id \"" + doc.id + "\"");
    }
  }
}

SplitAssignment Collect(const std::vector<Document>& docs,
                        const FoldRatios& ratios, uint64_t seed,
                        const std::vector<std::string>& fold_names,
                        const std::vector<std::size_t>& fold_of) {
  SplitAssignment split;
  split.ratios = ratios;
  split.seed = seed;
  for (const auto& name : fold_names) split.fold_ids[name];
  for (std::size_t d = 0; d < docs.size(); ++d) {
    split.fold_ids[fold_names[fold_of[d]]].push_back(docs[d].id);
  }
  split.balance_report = ComputeBalance(docs, split.fold_ids);
  return split;
}


// Chi-square distance of one label's fold counts from its targets changes by
// this much when one of its documents leaves fold `from` for fold `to`.
double MoveDelta(const std::vector<double>& count, const std::vector<double>& target,
                 std::size_t from, std::size_t to) {
  return (1.0 - 2.0 * (count[from] - target[from])) / target[from] +
         (1.0 + 2.0 * (count[to] - target[to])) / target[to];
}

// Local search over pairwise swaps between folds. A swap is kept when it
// lowers sum over labels and folds of (count - target)^2 / target, taken
// over labels found in at least `min_df` documents. Fold
// sizes are unchanged; the scan order is fixed, so the result is a pure
// function of the input assignment.
void RefineBalance(const LabelIndex& index, const std::vector<double>& fold_ratio,
                   std::size_t min_df, std::vector<std::size_t>* fold_of) {
  const std::size_t num_folds = fold_ratio.size();
  const std::size_t num_labels = index.labels.size();
  std::vector<std::vector<double>> count(num_labels, std::vector<double>(num_folds));
  std::vector<std::vector<double>> target(num_labels, std::vector<double>(num_folds));
  for (std::size_t l = 0; l < num_labels; ++l) {
    for (std::size_t j = 0; j < num_folds; ++j) {
      target[l][j] = fold_ratio[j] * static_cast<double>(index.label_docs[l].size());
    }
    for (const std::size_t d : index.label_docs[l]) count[l][(*fold_of)[d]] += 1.0;
  }
  std::vector<std::vector<std::size_t>> tracked(index.doc_labels.size());
  for (std::size_t d = 0; d < tracked.size(); ++d) {
    for (const std::size_t l : index.doc_labels[d]) {
      if (index.label_docs[l].size() >= min_df) tracked[d].push_back(l);
    }
  }
  const auto move_gain = [&](std::size_t d, std::size_t from, std::size_t to) {
    double delta = 0;
    for (const std::size_t l : tracked[d]) {
      delta += MoveDelta(count[l], target[l], from, to);
    }
    return delta;
  };
  const auto shares = [&](std::size_t d, std::size_t label) {
    const auto& labels = tracked[d];
    return std::find(labels.begin(), labels.end(), label) != labels.end();
  };
  const auto swap_delta = [&](std::size_t a, std::size_t b, std::size_t fa, std::size_t fb) {
    double delta = 0;
    for (const std::size_t l : tracked[a]) {
      if (!shares(b, l)) delta += MoveDelta(count[l], target[l], fa, fb);
    }
    for (const std::size_t l : tracked[b]) {
      if (!shares(a, l)) delta += MoveDelta(count[l], target[l], fb, fa);
    }
    return delta;
  };

  std::vector<std::pair<double, std::size_t>> side_a;
  std::vector<std::pair<double, std::size_t>> side_b;
  for (std::size_t pass = 0; pass < kMaxRefinePasses; ++pass) {
    bool improved = false;
    for (std::size_t fa = 0; fa < num_folds; ++fa) {
      for (std::size_t fb = fa + 1; fb < num_folds; ++fb) {
        side_a.clear();
        side_b.clear();
        for (std::size_t d = 0; d < fold_of->size(); ++d) {
          if (tracked[d].empty()) continue;
          if ((*fold_of)[d] == fa) side_a.emplace_back(move_gain(d, fa, fb), d);
          if ((*fold_of)[d] == fb) side_b.emplace_back(move_gain(d, fb, fa), d);
        }
        std::sort(side_a.begin(), side_a.end());
        std::sort(side_b.begin(), side_b.end());
        std::vector<bool> moved(fold_of->size(), false);
        for (const auto& [stale_a, a] : side_a) {
          if (stale_a >= 0) break;
          const double gain_a = move_gain(a, fa, fb);
          if (gain_a >= 0) continue;
          for (const auto& [stale_b, b] : side_b) {
            if (stale_b + gain_a >= 0) break;
            if (moved[b]) continue;
            if (swap_delta(a, b, fa, fb) >= -kTieEpsilon) continue;
            for (const std::size_t l : tracked[a]) {
              count[l][fa] -= 1.0;
              count[l][fb] += 1.0;
            }
            for (const std::size_t l : tracked[b]) {
              count[l][fb] -= 1.0;
              count[l][fa] += 1.0;
            }
            (*fold_of)[a] = fb;
            (*fold_of)[b] = fa;
            moved[a] = moved[b] = true;
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) break;
  }
}

}  // namespace

const std::vector<std::string>& SplitAssignment::ids(
    const std::string& fold) const {
  static const std::vector<std::string> kEmpty;
  const auto it = fold_ids.find(fold);
  return it == fold_ids.end() ? kEmpty : it->second;
}

void ValidateRatios(const FoldRatios& ratios) {
  if (ratios.empty()) throw UsageError("no folds requested");
  double sum = 0;
  for (const auto& [name, ratio] : ratios) {
    if (name.empty()) throw UsageError("fold names must be non-empty");
    if (!(ratio > 0) || !std::isfinite(ratio)) {
      throw UsageError("fold \"" + name + "\" must have a positive ratio");
    }
    sum += ratio;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw UsageError("fold ratios must sum to 1");
  }
}

SplitAssignment IterativeStratifiedSplit(const std::vector<Document>& docs,
                                         const FoldRatios& ratios,
                                         uint64_t seed,
                                         std::size_t refine_min_df) {
  ValidateRatios(ratios);
  CheckIds(docs);

  std::vector<std::string> fold_names;
  std::vector<double> fold_ratio;
  for (const auto& [name, ratio] : ratios) {
    fold_names.push_back(name);
    fold_ratio.push_back(ratio);
  }
  const std::size_t num_folds = fold_names.size();
  const LabelIndex index = BuildLabelIndex(docs);
  const std::size_t num_labels = index.labels.size();

  std::vector<double> demand(num_folds);
  for (std::size_t j = 0; j < num_folds; ++j) {
    demand[j] = fold_ratio[j] * static_cast<double>(docs.size());
  }
  // label_demand[l * num_folds + j]
  std::vector<double> label_demand(num_labels * num_folds);
  std::vector<std::size_t> remaining(num_labels);
  std::set<std::pair<std::size_t, std::size_t>> queue;  // (remaining, label)
  for (std::size_t l = 0; l < num_labels; ++l) {
    remaining[l] = index.label_docs[l].size();
    for (std::size_t j = 0; j < num_folds; ++j) {
      label_demand[l * num_folds + j] =
          fold_ratio[j] * static_cast<double>(remaining[l]);
    }
    queue.emplace(remaining[l], l);
  }

  std::mt19937_64 rng(seed);
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> fold_of(docs.size(), kUnassigned);
  std::vector<std::size_t> tied;

  auto pick_random = [&](const std::vector<std::size_t>& options) {
    if (options.size() == 1) return options.front();
    return options[rng() % options.size()];
  };

  // Keeps only the folds whose key is maximal (within kTieEpsilon).
  auto keep_max = [&](std::vector<std::size_t>* options, auto key) {
    double best = -std::numeric_limits<double>::infinity();
    for (const std::size_t j : *options) best = std::max(best, key(j));
    std::erase_if(*options,
                  [&](std::size_t j) { return key(j) < best - kTieEpsilon; });
  };

  auto assign = [&](std::size_t d, std::size_t fold) {
    fold_of[d] = fold;
    demand[fold] -= 1.0;
    for (const std::size_t l : index.doc_labels[d]) {
      label_demand[l * num_folds + fold] -= 1.0;
      queue.erase({remaining[l], l});
      --remaining[l];
      if (remaining[l] > 0) queue.emplace(remaining[l], l);
    }
  };

  while (!queue.empty()) {
    const std::size_t label = queue.begin()->second;
    for (const std::size_t d : index.label_docs[label]) {
      if (fold_of[d] != kUnassigned) continue;
      tied.resize(num_folds);
      for (std::size_t j = 0; j < num_folds; ++j) tied[j] = j;
      keep_max(&tied,
               [&](std::size_t j) { return label_demand[label * num_folds + j]; });
      keep_max(&tied, [&](std::size_t j) { return demand[j]; });
      assign(d, pick_random(tied));
    }
  }

  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (fold_of[d] != kUnassigned) continue;
    tied.resize(num_folds);
    for (std::size_t j = 0; j < num_folds; ++j) tied[j] = j;
    keep_max(&tied, [&](std::size_t j) { return demand[j]; });
    assign(d, pick_random(tied));
  }

  if (refine_min_df > 0) RefineBalance(index, fold_ratio, refine_min_df, &fold_of);
  return Collect(docs, ratios, seed, fold_names, fold_of);
}

SplitAssignment RandomSplit(const std::vector<Document>& docs,
                            const FoldRatios& ratios, uint64_t seed) {
  ValidateRatios(ratios);
  CheckIds(docs);
  std::vector<std::size_t> order(docs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }

  std::vector<std::string> fold_names;
  std::vector<std::size_t> fold_of(docs.size());
  double cumulative = 0;
  std::size_t begin = 0;
  std::size_t f = 0;
  for (const auto& [name, ratio] : ratios) {
    fold_names.push_back(name);
    cumulative += ratio;
    std::size_t end =
        f + 1 == ratios.size()
            ? docs.size()
            : static_cast<std::size_t>(
                  std::llround(cumulative * static_cast<double>(docs.size())));
    end = std::clamp(end, begin, docs.size());
    for (std::size_t i = begin; i < end; ++i) fold_of[order[i]] = f;
    begin = end;
    ++f;
  }
  return Collect(docs, ratios, seed, fold_names, fold_of);
}

std::vector<LabelBalance> ComputeBalance(
    const std::vector<Document>& docs,
    const std::map<std::string, std::vector<std::string>>& fold_ids) {
  std::unordered_map<std::string_view, const std::string*> fold_of_id;
  for (const auto& [fold, ids] : fold_ids) {
    for (const auto& id : ids) fold_of_id.emplace(id, &fold);
  }
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    const auto it = fold_of_id.find(doc.id);
    std::set<std::string_view> labels;
    for (const auto& k : doc.keywords) labels.insert(k.normalized);
    for (const auto label : labels) {
      ++df[std::string(label)];
      if (it != fold_of_id.end()) ++counts[std::string(label)][*it->second];
    }
  }
  std::vector<LabelBalance> report;
  report.reserve(df.size());
  for (const auto& [label, n] : df) {
    LabelBalance balance;
    balance.label = label;
    balance.document_frequency = n;
    for (const auto& [fold, ids] : fold_ids) {
      const auto& per_fold = counts[label];
      const auto c = per_fold.find(fold);
      balance.proportions[fold] =
          c == per_fold.end()
              ? 0.0
              : static_cast<double>(c->second) / static_cast<double>(n);
    }
    report.push_back(std::move(balance));
  }
  return report;
}

double MeanMaxLabelDeviation(const SplitAssignment& split, std::size_t min_df) {
  double total = 0;
  std::size_t labels = 0;
  for (const auto& balance : split.balance_report) {
    if (balance.document_frequency < min_df) continue;
    double worst = 0;
    for (const auto& [fold, ratio] : split.ratios) {
      const auto it = balance.proportions.find(fold);
      const double share = it == balance.proportions.end() ? 0.0 : it->second;
      worst = std::max(worst, std::abs(share - ratio));
    }
    total += worst;
    ++labels;
  }
  return labels == 0 ? 0.0 : total / static_cast<double>(labels);
}

json SplitToJson(const SplitAssignment& split) {
  json ratios = json::object();
  for (const auto& [fold, r] : split.ratios) ratios[fold] = r;
  json folds = json::object();
  for (const auto& [fold, ids] : split.fold_ids) folds[fold] = ids;
  return {{"seed", split.seed}, {"ratios", ratios}, {"folds", folds}};
}

SplitAssignment SplitFromJson(const json& value) {
  try {
    SplitAssignment split;
    split.seed = value.at("seed").get<uint64_t>();
    for (const auto& [fold, r] : value.at("ratios").items()) {
      split.ratios[fold] = r.get<double>();
    }
    std::set<std::string> seen;
    for (const auto& [fold, ids] : value.at("folds").items()) {
      auto& out = split.fold_ids[fold];
      for (const auto& id : ids) {
        out.push_back(id.get<std::string>());
        if (!seen.insert(out.back()).second) {
          throw DataError("document \"" + out.back() +
                          "\" appears in more than one fold");
        }
      }
    }
    return split;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed split file: ") + e.what());
  }
}

SplitAssignment LoadSplit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open split file: " + path);
  json value;
  try {
    in >> value;
  } catch (const json::exception& e) {
    throw DataError("malformed split file " + path + ": " + e.what());
  }
  return SplitFromJson(value);
}

}  // namespace kwbench
