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

#include "kwbench/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kwbench/corpus.h"
#include "kwbench/embedding.h"
#include "kwbench/errors.h"
#include "kwbench/eval.h"
#include "kwbench/extractors.h"
#include "kwbench/parallel.h"
#include "kwbench/prediction.h"
#include "kwbench/split.h"
#include "kwbench/term_table.h"
#include "kwbench/textrank.h"

namespace kwbench {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kMethods[] = {"tfidf",  "textrank", "firstphrases",
                                    "cvalue", "ncvalue",  "keybert"};

struct GlobalOptions {
  uint64_t seed = 42;
  std::size_t jobs = 1;
};

struct CorpusOptions {
  std::string corpus;
  bool skip_invalid = false;
  bool underscores_as_spaces = false;

  NormalizeOptions normalize() const { return {underscores_as_spaces}; }
};

struct MethodOptions {
  std::string method;
  std::string k = "10";
  std::string language = "pl";
  std::string stopwords;
  std::size_t max_len = kDefaultMaxCandidateLength;
  bool use_lemmas = false;
  std::optional<std::size_t> ngram_min;
  std::optional<std::size_t> ngram_max;
  TextRankParams textrank;
  NcValueWeights weights;
  std::size_t context_window = kDefaultContextWindow;
  std::string vectors;
  std::string precomputed;
  std::string diversity_mode = "mmr";
  double diversity = 0.7;
  std::size_t pool = kDefaultMssPool;
  bool zero_fallback = false;
};

// Writes `content` to `path`, creating parent directories.
void WriteFile(const std::string& path, const std::string& content) {
  const fs::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path);
  out << content;
  out.close();
  if (!out) throw DataError("error writing " + path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Document> LoadCorpus(const CorpusOptions& options,
                                 std::ostream& err) {
  ParseResult parsed = ParseCorpus(
      options.corpus,
      options.skip_invalid ? Strictness::kSkipInvalid : Strictness::kStrict,
      options.normalize());
  for (const auto& s : parsed.skipped) {
    err << "warning: " << options.corpus << ": skipped line " << s.line_number
        << ": " << s.reason << '\n';
  }
  if (parsed.documents.empty()) throw DataError("empty corpus: " + options.corpus);
  return std::move(parsed.documents);
}

// Documents of `fold` in corpus order.
std::vector<Document> FoldDocuments(const std::vector<Document>& docs,
                                    const SplitAssignment& split,
                                    const std::string& fold) {
  const auto& ids = split.ids(fold);
  if (ids.empty()) throw DataError("split has no documents in fold '" + fold + "'");
  const std::unordered_set<std::string> wanted(ids.begin(), ids.end());
  std::vector<Document> out;
  for (const auto& doc : docs) {
    if (wanted.contains(doc.id)) out.push_back(doc);
  }
  if (out.size() != wanted.size()) {
    throw DataError("split fold '" + fold + "' lists " +
                    std::to_string(wanted.size() - out.size()) +
                    " document(s) missing from the corpus");
  }
  return out;
}

FoldRatios ParseRatios(const std::string& text) {
  FoldRatios ratios;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("ratio '" + item + "' is not of the form fold=value");
    }
    const std::string fold = item.substr(0, eq);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("ratio '" + item + "' has no numeric value");
    }
    if (!ratios.emplace(fold, value).second) {
      throw UsageError("fold '" + fold + "' given twice in --ratios");
    }
  }
  ValidateRatios(ratios);
  return ratios;
}

std::vector<std::size_t> ParseRanks(const std::string& text) {
  std::vector<std::size_t> ranks;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::size_t k = ParseRank(item);
    if (std::find(ranks.begin(), ranks.end(), k) == ranks.end()) ranks.push_back(k);
  }
  if (ranks.empty()) throw UsageError("--ranks is empty");
  return ranks;
}

std::size_t ResolveJobs(std::size_t jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

json RatiosToJson(const FoldRatios& ratios) {
  json out = json::object();
  for (const auto& [fold, r] : ratios) out[fold] = r;
  return out;
}

// Reconstructs the long-form arguments that were actually given, so the
// manifest can replay the command.
std::vector<std::string> GivenArgs(const CLI::App& app) {
  std::vector<std::string> args;
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0 || opt->get_lnames().empty()) continue;
    const std::string name = "--" + opt->get_lnames().front();
    if (name == "--help") continue;
    if (opt->get_type_size_max() == 0) {
      args.push_back(name);
      continue;
    }
    for (const auto& value : opt->results()) {
      args.push_back(name);
      args.push_back(value);
    }
  }
  return args;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args);

 private:
  void Stats();
  void Split();
  void Extract();
  void Transfer();
  void Evaluate();
  void Report();
  int Rerun();

  StopwordList Stopwords() const;
  ExtractOptions MakeExtractOptions(const StopwordList& stopwords) const;
  json MethodConfig() const;
  // Runs the selected method on `targets`. `idf_docs` feed TF-IDF document
  // frequencies and `table_docs` the C-value term table.
  std::vector<RankedPrediction> RunMethod(const std::vector<Document>& targets,
                                          const std::vector<Document>& idf_docs,
                                          const std::vector<Document>& table_docs,
                                          const ExtractOptions& options);
  std::pair<std::size_t, std::size_t> NgramRange() const;

  void WriteWithManifest(const std::string& path, const std::string& content,
                         json config);

  std::ostream& out_;
  std::ostream& err_;
  CLI::App* active_ = nullptr;
  std::vector<std::string> global_args_;

  GlobalOptions global_;
  CorpusOptions corpus_;
  MethodOptions method_;
  std::string split_path_;
  std::string fold_;
  std::string out_path_;
  std::vector<std::size_t> min_docs_;
  std::string ratios_ = "train=0.7,test=0.3";
  std::string split_method_ = "stratified";
  std::size_t balance_min_df_ = 10;
  std::size_t refine_min_df_ = kDefaultRefineMinDf;
  std::string train_fold_ = "train";
  std::string test_fold_ = "test";
  std::vector<std::string> inputs_;
  std::vector<std::string> prediction_paths_;
  std::vector<std::string> scenarios_;
  std::string ranks_ = "1,3,5";
  std::string macro_mode_ = "label_gold";
  std::size_t min_label_docs_ = 10;
  bool filter_predictions_ = false;
  std::string tsv_path_;
  std::string json_path_;
  std::string manifest_;
};

void AddCorpusOptions(CLI::App* sub, CorpusOptions* options, bool required) {
  auto* corpus = sub->add_option("--corpus", options->corpus, "JSONL corpus file");
  if (required) corpus->required();
  sub->add_flag("--skip-invalid", options->skip_invalid,
                "Skip malformed corpus lines instead of failing");
  sub->add_flag("--underscores-as-spaces", options->underscores_as_spaces,
                "Treat '_' in keywords as a space");
}

void AddMethodOptions(CLI::App* sub, MethodOptions* m) {
  sub->add_option("--method", m->method, "Extraction method")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMethods),
                                                     std::end(kMethods))));
  sub->add_option("--k", m->k, "Keywords per document, or 'all'")
      ->capture_default_str();
  sub->add_option("--language", m->language, "Bundled stopword list: pl, en, none")
      ->capture_default_str();
  sub->add_option("--stopwords", m->stopwords, "Stopword file (overrides --language)");
  sub->add_option("--max-len", m->max_len, "Longest phrase candidate, in tokens")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--use-lemmas", m->use_lemmas, "Use lemma_text when present");
  sub->add_option("--ngram-min", m->ngram_min, "Shortest n-gram (tfidf, keybert)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--ngram-max", m->ngram_max, "Longest n-gram (tfidf, keybert)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--window", m->textrank.window, "TextRank co-occurrence window")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  sub->add_option("--damping", m->textrank.damping, "TextRank damping factor")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--tol", m->textrank.tol, "TextRank convergence tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-iter", m->textrank.max_iter, "TextRank iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--alpha", m->weights.alpha, "NC-value C-value weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--beta", m->weights.beta, "NC-value context weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--context-window", m->context_window,
                  "NC-value context window, in tokens")
      ->capture_default_str();
  sub->add_option("--vectors", m->vectors, "Word-vector file (keybert)");
  sub->add_option("--precomputed", m->precomputed,
                  "Precomputed document/phrase vectors, JSONL (keybert)");
  sub->add_option("--diversity-mode", m->diversity_mode, "mmr or mss (keybert)")
      ->check(CLI::IsMember({"mmr", "mss"}))
      ->capture_default_str();
  sub->add_option("--diversity", m->diversity, "MMR diversity (keybert)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--pool", m->pool, "MSS candidate pool (keybert)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--zero-fallback", m->zero_fallback,
                "Map unknown tokens to the zero vector (keybert)");
}

int Runner::Run(const std::vector<std::string>& args) {
  CLI::App app{"Keyword extraction benchmarking toolkit", "kwbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", global_.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", global_.jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Corpus vocabulary statistics");
  AddCorpusOptions(stats, &corpus_, true);
  stats->add_option("--min-docs", min_docs_,
                    "Also count keywords used in at least N documents (repeatable)")
      ->check(CLI::PositiveNumber);
  stats->add_option("--split", split_path_, "Split file; adds per-fold statistics");
  stats->add_option("--out", out_path_, "Output JSON (default: stdout)");

  auto* split = app.add_subcommand("split", "Create a train/dev/test split");
  AddCorpusOptions(split, &corpus_, true);
  split->add_option("--ratios", ratios_, "Fold ratios, e.g. train=0.7,test=0.3")
      ->capture_default_str();
  split->add_option("--method", split_method_, "stratified or random")
      ->check(CLI::IsMember({"stratified", "random"}))
      ->capture_default_str();
  split->add_option("--refine-min-df", refine_min_df_,
                    "Labels this frequent are rebalanced after stratification "
                    "(0 = off)")
      ->capture_default_str();
  split->add_option("--balance-min-df", balance_min_df_,
                    "Label frequency floor for the reported balance figure")
      ->capture_default_str();
  split->add_option("--out", out_path_, "Output split JSON")->required();

  auto* extract = app.add_subcommand("extract", "Extract keywords from a corpus");
  AddCorpusOptions(extract, &corpus_, true);
  AddMethodOptions(extract, &method_);
  extract->add_option("--split", split_path_,
                      "Split file; TF-IDF statistics come from --train-fold");
  extract->add_option("--fold", fold_, "Only extract documents of this fold");
  extract->add_option("--train-fold", train_fold_, "Fold used for TF-IDF statistics")
      ->capture_default_str();
  extract->add_option("--out", out_path_, "Output predictions JSONL")->required();

  auto* transfer = app.add_subcommand(
      "transfer", "Extract keywords from plain-text files (id = file name)");
  transfer->add_option("--input", inputs_, "Text files or directories")
      ->required()
      ->check(CLI::ExistingPath);
  AddCorpusOptions(transfer, &corpus_, false);
  transfer->get_option("--corpus")
      ->description("Reference corpus for TF-IDF and C-value statistics");
  AddMethodOptions(transfer, &method_);
  transfer->add_option("--out", out_path_, "Output predictions JSONL")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Score prediction files");
  AddCorpusOptions(evaluate, &corpus_, true);
  evaluate->add_option("--split", split_path_, "Split file")->required();
  evaluate->add_option("--predictions", prediction_paths_,
                       "Predictions JSONL (repeatable)")
      ->required();
  evaluate->add_option("--scenario", scenarios_,
                       "full_vocab, min_freq_10, train_vocab_restricted or all "
                       "(repeatable; default full_vocab)");
  evaluate->add_option("--ranks", ranks_, "Comma-separated ranks; 'all' allowed")
      ->capture_default_str();
  evaluate->add_option("--macro-mode", macro_mode_,
                       "label_gold, label_gold_union_predicted or document")
      ->check(CLI::IsMember(
          {"label_gold", "label_gold_union_predicted", "document"}))
      ->capture_default_str();
  evaluate->add_option("--min-label-docs", min_label_docs_,
                       "Document frequency floor of the min_freq scenario")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_flag("--filter-predictions", filter_predictions_,
                     "min_freq scenario: also drop rare predicted keywords");
  evaluate->add_option("--train-fold", train_fold_, "Training fold name")
      ->capture_default_str();
  evaluate->add_option("--test-fold", test_fold_, "Test fold name")
      ->capture_default_str();
  evaluate->add_option("--tsv", tsv_path_, "Output TSV (default: stdout)");
  evaluate->add_option("--json", json_path_, "Output JSON with full counts");

  auto* report = app.add_subcommand("report", "Regenerate a TSV from evaluation JSON");
  report->add_option("--json", json_path_, "Evaluation JSON")->required();
  report->add_option("--out", out_path_, "Output TSV (default: stdout)");

  auto* rerun = app.add_subcommand("rerun", "Repeat the command in a manifest");
  rerun->add_option("--manifest", manifest_, "Manifest JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitUsage;
  }

  active_ = app.get_subcommands().front();
  global_args_ = GivenArgs(app);
  global_.jobs = ResolveJobs(global_.jobs);

  const std::string name = active_->get_name();
  if (name == "stats") Stats();
  if (name == "split") Split();
  if (name == "extract") Extract();
  if (name == "transfer") Transfer();
  if (name == "evaluate") Evaluate();
  if (name == "report") Report();
  if (name == "rerun") return Rerun();
  return kExitOk;
}

void Runner::WriteWithManifest(const std::string& path,
                               const std::string& content, json config) {
  WriteFile(path, content);
  std::vector<std::string> argv = global_args_;
  argv.push_back(active_->get_name());
  for (auto& a : GivenArgs(*active_)) argv.push_back(std::move(a));
  const json manifest = {
      {"tool", "kwbench"},
      {"subcommand", active_->get_name()},
      {"argv", argv},
      {"seed", global_.seed},
      {"config", std::move(config)},
  };
  WriteFile(ManifestPath(path), manifest.dump(2) + "\n");
}

void Runner::Stats() {
  const auto docs = LoadCorpus(corpus_, err_);
  std::vector<std::size_t> min_docs = min_docs_;
  if (min_docs.empty()) min_docs = {10};
  std::sort(min_docs.begin(), min_docs.end());
  min_docs.erase(std::unique(min_docs.begin(), min_docs.end()), min_docs.end());

  json result = VocabStatsToJson(ComputeVocabStats(docs, min_docs));
  if (!split_path_.empty()) {
    const SplitAssignment split = LoadSplit(split_path_);
    json folds = json::object();
    for (const auto& [fold, ids] : split.fold_ids) {
      if (ids.empty()) continue;
      folds[fold] = VocabStatsToJson(
          ComputeVocabStats(FoldDocuments(docs, split, fold), min_docs));
    }
    result["folds"] = std::move(folds);
  }
  const std::string content = result.dump(2) + "\n";
  if (out_path_.empty()) {
    out_ << content;
    return;
  }
  WriteWithManifest(out_path_, content,
                    {{"corpus", corpus_.corpus},
                     {"skip_invalid", corpus_.skip_invalid},
                     {"underscores_as_spaces", corpus_.underscores_as_spaces},
                     {"min_docs", min_docs},
                     {"split", split_path_}});
}

void Runner::Split() {
  const auto docs = LoadCorpus(corpus_, err_);
  const FoldRatios ratios = ParseRatios(ratios_);
  const SplitAssignment split =
      split_method_ == "random"
          ? RandomSplit(docs, ratios, global_.seed)
          : IterativeStratifiedSplit(docs, ratios, global_.seed, refine_min_df_);
  for (const auto& [fold, ids] : split.fold_ids) {
    err_ << fold << ": " << ids.size() << " documents\n";
  }
  err_ << "mean max label deviation (df >= " << balance_min_df_
       << "): " << MeanMaxLabelDeviation(split, balance_min_df_) << '\n';
  WriteWithManifest(out_path_, SplitToJson(split).dump(2) + "\n",
                    {{"corpus", corpus_.corpus},
                     {"skip_invalid", corpus_.skip_invalid},
                     {"underscores_as_spaces", corpus_.underscores_as_spaces},
                     {"ratios", RatiosToJson(ratios)},
                     {"method", split_method_},
                     {"refine_min_df", refine_min_df_},
                     {"seed", global_.seed}});
}

StopwordList Runner::Stopwords() const {
  if (!method_.stopwords.empty()) return StopwordList::Load(method_.stopwords);
  return StopwordList::Default(StopwordList::ParseLanguage(method_.language));
}

ExtractOptions Runner::MakeExtractOptions(const StopwordList& stopwords) const {
  ExtractOptions options;
  options.stopwords = &stopwords;
  options.max_len = method_.max_len;
  options.use_lemmas = method_.use_lemmas;
  return options;
}

std::pair<std::size_t, std::size_t> Runner::NgramRange() const {
  const std::size_t default_max = method_.method == "keybert" ? 2 : 3;
  const std::size_t lo = method_.ngram_min.value_or(1);
  const std::size_t hi = method_.ngram_max.value_or(std::max(lo, default_max));
  if (lo > hi) throw UsageError("--ngram-min exceeds --ngram-max");
  return {lo, hi};
}

json Runner::MethodConfig() const {
  const MethodOptions& m = method_;
  json config = {
      {"method", m.method},
      {"k", RankName(ParseRank(m.k))},
      {"stopwords", m.stopwords.empty() ? "builtin:" + m.language : m.stopwords},
      {"max_len", m.max_len},
      {"use_lemmas", m.use_lemmas},
  };
  if (m.method == "tfidf" || m.method == "keybert") {
    const auto [lo, hi] = NgramRange();
    config["ngram_min"] = lo;
    config["ngram_max"] = hi;
  }
  if (m.method == "textrank") {
    config["window"] = m.textrank.window;
    config["damping"] = m.textrank.damping;
    config["tol"] = m.textrank.tol;
    config["max_iter"] = m.textrank.max_iter;
  }
  if (m.method == "ncvalue") {
    config["alpha"] = m.weights.alpha;
    config["beta"] = m.weights.beta;
  }
  if (m.method == "cvalue" || m.method == "ncvalue") {
    config["context_window"] = m.context_window;
  }
  if (m.method == "keybert") {
    config["vectors"] = m.vectors;
    config["precomputed"] = m.precomputed;
    config["diversity_mode"] = m.diversity_mode;
    config["diversity"] = m.diversity;
    config["pool"] = m.pool;
    config["zero_fallback"] = m.zero_fallback;
    // Settings left at this tool's own defaults rather than chosen by the
    // caller; there is no reference value for them.
    json tool_defaults = json::array();
    for (const char* name : {"--ngram-min", "--ngram-max", "--diversity-mode",
                             "--diversity", "--pool", "--language"}) {
      if (active_->get_option(name)->count() == 0) tool_defaults.push_back(name);
    }
    config["tool_defaults"] = std::move(tool_defaults);
  }
  return config;
}

std::vector<RankedPrediction> Runner::RunMethod(
    const std::vector<Document>& targets, const std::vector<Document>& idf_docs,
    const std::vector<Document>& table_docs, const ExtractOptions& options) {
  const MethodOptions& m = method_;
  const std::size_t k = ParseRank(m.k);
  const std::size_t jobs = global_.jobs;
  std::vector<RankedPrediction> out(targets.size());

  if (m.method == "tfidf") {
    const auto [lo, hi] = NgramRange();
    const IdfTable idf = IdfTable::Build(idf_docs, options, lo, hi, jobs);
    ParallelFor(targets.size(), jobs, [&](std::size_t i) {
      out[i] = TfidfRank(targets[i], idf, options, k);
    });
  } else if (m.method == "textrank") {
    ParallelFor(targets.size(), jobs, [&](std::size_t i) {
      out[i] = TextRankRank(targets[i], options, m.textrank, k);
    });
  } else if (m.method == "firstphrases") {
    ParallelFor(targets.size(), jobs, [&](std::size_t i) {
      out[i] = FirstPhrasesRank(targets[i], options, k);
    });
  } else if (m.method == "cvalue" || m.method == "ncvalue") {
    const bool nc = m.method == "ncvalue";
    if (nc && std::abs(m.weights.alpha + m.weights.beta - 1.0) > 1e-9) {
      throw UsageError("--alpha and --beta must sum to 1");
    }
    const TermTable table =
        TermTable::Build(table_docs, options, m.context_window, jobs);
    ParallelFor(targets.size(), jobs, [&](std::size_t i) {
      out[i] = nc ? NCValueRank(targets[i], table, options, k, m.weights)
                  : CValueRank(targets[i], table, options, k);
    });
  } else if (m.method == "keybert") {
    if (m.vectors.empty()) {
      throw UsageError("method keybert requires --vectors");
    }
    EmbeddingProvider provider = EmbeddingProvider::LoadVectorFile(m.vectors);
    if (!m.precomputed.empty()) provider.LoadPrecomputed(m.precomputed);
    provider.set_zero_fallback(m.zero_fallback);
    KeyBertParams params;
    std::tie(params.n_min, params.n_max) = NgramRange();
    params.mode = m.diversity_mode == "mss" ? DiversityMode::kMss : DiversityMode::kMmr;
    params.diversity = m.diversity;
    params.pool = m.pool;
    std::vector<std::vector<std::string>> warnings(targets.size());
    ParallelFor(targets.size(), jobs, [&](std::size_t i) {
      KeyBertResult r = KeyBertRank(targets[i], provider, options, params, k);
      out[i] = std::move(r.prediction);
      warnings[i] = std::move(r.warnings);
    });
    for (std::size_t i = 0; i < targets.size(); ++i) {
      for (const auto& w : warnings[i]) {
        err_ << "warning: " << targets[i].id << ": " << w << '\n';
      }
    }
  } else {
    throw UsageError("unknown method '" + m.method + "'");
  }
  return out;
}

void Runner::Extract() {
  const auto docs = LoadCorpus(corpus_, err_);
  const StopwordList stopwords = Stopwords();
  const ExtractOptions options = MakeExtractOptions(stopwords);

  std::vector<Document> targets = docs;
  std::vector<Document> idf_docs = docs;
  if (!split_path_.empty()) {
    const SplitAssignment split = LoadSplit(split_path_);
    if (method_.method == "tfidf") idf_docs = FoldDocuments(docs, split, train_fold_);
    if (!fold_.empty()) targets = FoldDocuments(docs, split, fold_);
  } else if (!fold_.empty()) {
    throw UsageError("--fold requires --split");
  }

  std::ostringstream buffer;
  WritePredictions(RunMethod(targets, idf_docs, docs, options), buffer);

  json config = MethodConfig();
  config["corpus"] = corpus_.corpus;
  config["skip_invalid"] = corpus_.skip_invalid;
  config["underscores_as_spaces"] = corpus_.underscores_as_spaces;
  config["split"] = split_path_;
  config["fold"] = fold_;
  config["train_fold"] = train_fold_;
  config["documents"] = targets.size();
  WriteWithManifest(out_path_, buffer.str(), std::move(config));
}

void Runner::Transfer() {
  std::vector<fs::path> files;
  for (const auto& input : inputs_) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file()) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(input);
    }
  }
  if (files.empty()) throw DataError("no input files");

  std::vector<Document> targets;
  std::set<std::string> ids;
  for (const auto& file : files) {
    Document doc;
    doc.id = file.filename().string();
    if (!ids.insert(doc.id).second) {
      throw DataError("two input files are named '" + doc.id + "'");
    }
    doc.abstract = ReadFile(file.string());
    targets.push_back(std::move(doc));
  }

  const StopwordList stopwords = Stopwords();
  const ExtractOptions options = MakeExtractOptions(stopwords);
  const std::vector<Document> reference =
      corpus_.corpus.empty() ? targets : LoadCorpus(corpus_, err_);

  std::ostringstream buffer;
  WritePredictions(RunMethod(targets, reference, reference, options), buffer);

  json config = MethodConfig();
  std::vector<std::string> names;
  for (const auto& f : files) names.push_back(f.string());
  config["inputs"] = names;
  config["reference_corpus"] = corpus_.corpus;
  config["documents"] = targets.size();
  WriteWithManifest(out_path_, buffer.str(), std::move(config));
}

void Runner::Evaluate() {
  const auto docs = LoadCorpus(corpus_, err_);
  const SplitAssignment split = LoadSplit(split_path_);
  const std::vector<std::size_t> ranks = ParseRanks(ranks_);

  std::vector<Scenario> scenarios;
  for (const auto& name : scenarios_) {
    if (name == "all") {
      for (const Scenario s : {Scenario::kFullVocab, Scenario::kMinFreq,
                               Scenario::kTrainVocabRestricted}) {
        if (std::find(scenarios.begin(), scenarios.end(), s) == scenarios.end()) {
          scenarios.push_back(s);
        }
      }
      continue;
    }
    const Scenario s = ParseScenario(name);
    if (std::find(scenarios.begin(), scenarios.end(), s) == scenarios.end()) {
      scenarios.push_back(s);
    }
  }
  if (scenarios.empty()) scenarios.push_back(Scenario::kFullVocab);

  EvalOptions options;
  options.macro_mode = ParseMacroMode(macro_mode_);
  options.min_label_docs = min_label_docs_;
  options.filter_predictions = filter_predictions_;
  options.train_fold = train_fold_;
  options.test_fold = test_fold_;

  std::ostringstream tsv;
  WriteReportTsvHeader(tsv);
  json reports = json::array();
  for (const auto& path : prediction_paths_) {
    const auto predictions = ReadPredictions(path, corpus_.normalize());
    for (const Scenario scenario : scenarios) {
      EvalReport report;
      try {
        report = EvaluateRun(docs, split, predictions, scenario, ranks, options);
      } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
      }
      if (report.method.empty()) report.method = fs::path(path).stem().string();
      for (const auto& w : report.warnings) {
        err_ << "warning: " << path << " (" << ScenarioName(scenario)
             << "): " << w << '\n';
      }
      WriteReportTsvRows(report, tsv);
      reports.push_back(ReportToJson(report));
    }
  }

  std::vector<std::string> scenario_names;
  for (const Scenario s : scenarios) scenario_names.push_back(ScenarioName(s));
  const json config = {
      {"corpus", corpus_.corpus},
      {"skip_invalid", corpus_.skip_invalid},
      {"underscores_as_spaces", corpus_.underscores_as_spaces},
      {"split", split_path_},
      {"predictions", prediction_paths_},
      {"scenarios", scenario_names},
      {"ranks", ranks_},
      {"macro_mode", macro_mode_},
      {"min_label_docs", min_label_docs_},
      {"filter_predictions", filter_predictions_},
      {"train_fold", train_fold_},
      {"test_fold", test_fold_},
  };
  if (!json_path_.empty()) {
    WriteWithManifest(json_path_, json{{"reports", reports}}.dump(2) + "\n", config);
  }
  if (tsv_path_.empty()) {
    out_ << tsv.str();
  } else {
    WriteWithManifest(tsv_path_, tsv.str(), config);
  }
}

void Runner::Report() {
  json value;
  try {
    value = json::parse(ReadFile(json_path_));
  } catch (const json::exception& e) {
    throw DataError(json_path_ + ": " + e.what());
  }
  if (!value.contains("reports") || !value["reports"].is_array()) {
    throw DataError(json_path_ + ": no \"reports\" array");
  }
  std::ostringstream tsv;
  WriteReportTsvHeader(tsv);
  for (const auto& r : value["reports"]) WriteReportTsvRows(ReportFromJson(r), tsv);
  if (out_path_.empty()) {
    out_ << tsv.str();
  } else {
    WriteWithManifest(out_path_, tsv.str(), {{"json", json_path_}});
  }
}

int Runner::Rerun() {
  std::vector<std::string> argv;
  try {
    const json manifest = json::parse(ReadFile(manifest_));
    argv = manifest.at("argv").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw DataError(manifest_ + ": " + e.what());
  }
  if (std::find(argv.begin(), argv.end(), "rerun") != argv.end()) {
    throw DataError(manifest_ + ": manifest records another rerun");
  }
  return RunCli(argv, out_, err_);
}

}  // namespace

std::string ManifestPath(const std::string& output) {
  return output + ".manifest.json";
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  try {
    Runner runner(out, err);
    return runner.Run(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

int RunCli(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace kwbench
