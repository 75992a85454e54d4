// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "erag/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <utility>

#include "erag/annotators.hpp"
#include "erag/correlation.hpp"
#include "erag/e2e.hpp"
#include "erag/error.hpp"
#include "erag/generation.hpp"
#include "erag/records.hpp"
#include "erag/text.hpp"
#include "json.hpp"

namespace erag {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr AnnotationScheme kAllSchemes[] = {
    AnnotationScheme::kErag, AnnotationScheme::kContainment,
    AnnotationScheme::kProvenance, AnnotationScheme::kLlmJudge};

int SchemeOrder(AnnotationScheme s) {
  return static_cast<int>(std::find(std::begin(kAllSchemes),
                                    std::end(kAllSchemes), s) -
                          std::begin(kAllSchemes));
}

bool Contains(const std::vector<AnnotationScheme>& schemes,
              AnnotationScheme s) {
  return std::find(schemes.begin(), schemes.end(), s) != schemes.end();
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json CostJson(const CostRecord& c) {
  return {{"prompt_tokens", c.prompt_tokens},
          {"output_tokens", c.output_tokens},
          {"simulated_flops", c.simulated_flops}};
}

void RequireFile(const std::filesystem::path& path, std::string_view producer) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kNotFound,
                "missing " + path.string() + "; run `erag " +
                    std::string(producer) + "` first");
  }
}

class PhaseTimer {
 public:
  PhaseTimer(PhaseSummary& summary, const Diagnostics& diagnostics)
      : summary_(summary),
        diagnostics_(diagnostics),
        start_(Clock::now()),
        warnings_before_(diagnostics.size()) {}

  void Finish() {
    summary_.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    const auto all = diagnostics_.warnings();
    summary_.warnings.insert(summary_.warnings.end(),
                             all.begin() + static_cast<std::ptrdiff_t>(
                                               warnings_before_),
                             all.end());
  }

 private:
  PhaseSummary& summary_;
  const Diagnostics& diagnostics_;
  Clock::time_point start_;
  std::size_t warnings_before_;
};

}  // namespace

struct Pipeline::Inputs {
  std::vector<DownstreamExample> examples;
  DocumentStore docs;
  std::map<std::string, RankedList> lists;
  std::vector<std::string> warnings;
};

Pipeline::Pipeline(RunConfig config) : config_(std::move(config)) {}
Pipeline::~Pipeline() = default;

void Pipeline::SetBackend(std::shared_ptr<GenerationBackend> backend) {
  backend_ = std::move(backend);
}

void Pipeline::SetJudgeBackend(std::shared_ptr<GenerationBackend> backend) {
  judge_backend_ = std::move(backend);
}

std::filesystem::path Pipeline::OutPath(std::string_view name) const {
  return config_.Resolve(config_.out_dir) / std::string(name);
}

const Pipeline::Inputs& Pipeline::LoadInputs() {
  if (inputs_) return *inputs_;
  auto in = std::make_unique<Inputs>();
  DatasetOptions options{config_.task, config_.label_set};
  auto dataset = LoadDataset(config_.Resolve(config_.dataset_path),
                             DatasetFormat::kKiltJsonl, options);
  in->examples = std::move(dataset.examples);
  in->warnings = std::move(dataset.warnings);
  const auto articles = LoadArticles(config_.Resolve(config_.corpus_path));
  SegmentCorpus(articles, config_.segmentation,
                [&](Document&& doc) { in->docs.Add(std::move(doc)); });
  for (auto& list :
       LoadRunFile(config_.Resolve(config_.run_path), config_.depth)) {
    std::string qid = list.query_id;
    in->lists.emplace(std::move(qid), std::move(list));
  }
  std::set<std::string> known;
  for (const auto& ex : in->examples) {
    known.insert(ex.query_id);
    if (!in->lists.count(ex.query_id)) {
      in->warnings.push_back("query " + ex.query_id +
                             " has no ranked list; skipped");
    }
  }
  for (const auto& [qid, list] : in->lists) {
    if (!known.count(qid)) {
      in->warnings.push_back("ranked list for unknown query " + qid +
                             " ignored");
    }
  }
  for (const auto& w : in->warnings) diagnostics_.Warn(w);
  inputs_ = std::move(in);
  return *inputs_;
}

GenerationBackend& Pipeline::MainBackend() {
  if (!backend_) backend_ = MakeBackend(config_.backend, config_);
  return *backend_;
}

GenerationBackend& Pipeline::JudgeBackend() {
  if (judge_backend_) return *judge_backend_;
  if (config_.judge_backend) {
    judge_backend_ = MakeBackend(*config_.judge_backend, config_);
    return *judge_backend_;
  }
  return MainBackend();
}

ResponseCache& Pipeline::Cache() {
  if (!cache_) {
    cache_ = std::make_unique<ResponseCache>(
        config_.cache_dir.empty() ? std::filesystem::path()
                                  : config_.Resolve(config_.cache_dir));
  }
  return *cache_;
}

void Pipeline::RecordTiming(const PhaseSummary& summary) const {
  const auto path = OutPath(kTimingsJson);
  ordered_json timings = ordered_json::object();
  if (std::filesystem::exists(path)) {
    try {
      timings = ordered_json::parse(ReadFile(path));
    } catch (const nlohmann::json::exception&) {
      timings = ordered_json::object();
    }
  }
  timings[summary.phase] = {{"wall_seconds", summary.wall_seconds},
                            {"backend_calls", summary.backend_calls},
                            {"records_written", summary.records_written},
                            {"records_reused", summary.records_reused},
                            {"warnings", summary.warnings.size()}};
  WriteFileAtomic(path, timings.dump(2) + "\n");
}

PhaseSummary Pipeline::Annotate() {
  PhaseSummary summary;
  summary.phase = "annotate";
  PhaseTimer timer(summary, diagnostics_);
  const Inputs& in = LoadInputs();

  if (Contains(config_.schemes, AnnotationScheme::kContainment) &&
      config_.task != TaskType::kExtractiveQa) {
    throw Error(ErrorCode::kUnsupportedTask,
                "containment annotation is undefined for " +
                    std::string(TaskTypeName(config_.task)) +
                    " datasets: gold outputs do not occur in documents");
  }

  std::map<std::pair<AnnotationScheme, std::string>, AnnotationResult> records;
  const auto annotations_path = OutPath(kAnnotationsFile);
  if (std::filesystem::exists(annotations_path)) {
    for (auto& a : ReadJsonl(annotations_path, &AnnotationFromJson)) {
      records[{a.scheme, a.query_id}] = std::move(a);
    }
  }

  std::vector<const DownstreamExample*> examples;
  for (const auto& ex : in.examples) {
    if (in.lists.count(ex.query_id)) examples.push_back(&ex);
  }

  const DownstreamMetric metric = config_.MakeDownstreamMetric();
  GenerationOptions gen_options{config_.backend.max_parallel, config_.fail_fast};
  bool fatal_failure = false;

  for (AnnotationScheme scheme : config_.schemes) {
    if (scheme == AnnotationScheme::kContainment ||
        scheme == AnnotationScheme::kProvenance) {
      for (const auto* ex : examples) {
        const RankedList& list = in.lists.at(ex->query_id);
        AnnotationResult a =
            scheme == AnnotationScheme::kContainment
                ? AnnotateContainment(*ex, list, in.docs, config_.normalization)
                : AnnotateProvenance(*ex, list, in.docs);
        for (auto& w : a.warnings) diagnostics_.Warn(std::move(w));
        a.warnings.clear();
        records[{scheme, ex->query_id}] = std::move(a);
        ++summary.records_written;
      }
      continue;
    }

    const bool is_erag = scheme == AnnotationScheme::kErag;
    GenerationBackend& backend = is_erag ? MainBackend() : JudgeBackend();
    const PromptTemplate& prompt =
        is_erag ? config_.generation_template : config_.judge_template;
    const std::string backend_id = backend.backend_id();
    const std::size_t parallel =
        is_erag || !config_.judge_backend ? config_.backend.max_parallel
                                          : config_.judge_backend->max_parallel;
    gen_options.max_parallel = parallel;
    Generator generator(backend, &Cache(), gen_options, &diagnostics_);

    std::vector<const DownstreamExample*> pending;
    std::vector<GenerationRequest> requests;
    for (const auto* ex : examples) {
      const RankedList& list = in.lists.at(ex->query_id);
      auto it = records.find({scheme, ex->query_id});
      if (it != records.end() && it->second.complete() &&
          it->second.doc_ids == list.doc_ids() &&
          it->second.backend_id == backend_id &&
          it->second.template_id == prompt.template_id) {
        ++summary.records_reused;
        continue;
      }
      pending.push_back(ex);
      try {
        for (auto& r : SingleDocumentRequests(*ex, list, in.docs)) {
          requests.push_back(std::move(r));
        }
      } catch (const Error& e) {
        throw Error(e.code(), std::string(SchemeName(scheme)) +
                                  " annotation: " + e.what());
      }
    }
    const auto outcomes = generator.GenerateBatch(prompt, requests);
    summary.backend_calls += generator.new_calls();

    std::size_t offset = 0;
    for (const auto* ex : pending) {
      const RankedList& list = in.lists.at(ex->query_id);
      const std::span<const GenerationOutcome> slice(
          outcomes.data() + offset, list.entries.size());
      offset += list.entries.size();
      AnnotationResult a =
          is_erag ? AssembleErag(*ex, list, slice, metric, backend_id,
                                 prompt.template_id)
                  : AssembleJudge(*ex, list, slice, backend_id,
                                  prompt.template_id);
      if (!a.complete()) {
        fatal_failure = fatal_failure || config_.fail_fast;
        diagnostics_.Warn("query " + ex->query_id + " (" +
                          std::string(SchemeName(scheme)) +
                          ") has missing labels; excluded from aggregation");
      }
      if (a.parse_failures > 0) {
        diagnostics_.Warn("query " + ex->query_id + ": " +
                          std::to_string(a.parse_failures) +
                          " unparseable judge outputs labelled 0");
      }
      for (auto& w : a.warnings) diagnostics_.Warn(std::move(w));
      a.warnings.clear();
      records[{scheme, ex->query_id}] = std::move(a);
      ++summary.records_written;
    }
  }

  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < in.examples.size(); ++i) {
    position[in.examples[i].query_id] = i;
  }
  std::vector<const AnnotationResult*> ordered;
  for (const auto& [key, a] : records) ordered.push_back(&a);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const AnnotationResult* a, const AnnotationResult* b) {
                     const auto pa = position.count(a->query_id)
                                         ? position[a->query_id]
                                         : position.size();
                     const auto pb = position.count(b->query_id)
                                         ? position[b->query_id]
                                         : position.size();
                     return std::tuple(SchemeOrder(a->scheme), pa, a->query_id) <
                            std::tuple(SchemeOrder(b->scheme), pb, b->query_id);
                   });
  std::vector<std::string> lines;
  for (const auto* a : ordered) lines.push_back(AnnotationToJson(*a));
  WriteFileAtomic(annotations_path, JoinLines(lines));

  timer.Finish();
  RecordTiming(summary);
  if (fatal_failure) {
    throw Error(ErrorCode::kBackendUnavailable,
                "annotation aborted after a generation failure (--fail-fast)");
  }
  return summary;
}

PhaseSummary Pipeline::Evaluate() {
  PhaseSummary summary;
  summary.phase = "evaluate";
  PhaseTimer timer(summary, diagnostics_);
  const auto annotations_path = OutPath(kAnnotationsFile);
  RequireFile(annotations_path, "annotate");

  std::vector<std::string> lines;
  for (const auto& a : ReadJsonl(annotations_path, &AnnotationFromJson)) {
    if (!Contains(config_.schemes, a.scheme)) continue;
    if (!a.complete()) {
      diagnostics_.Warn("query " + a.query_id + " (" +
                        std::string(SchemeName(a.scheme)) +
                        ") has missing labels; excluded");
      continue;
    }
    if (a.labels.empty()) {
      diagnostics_.Warn("query " + a.query_id + " has an empty ranked list");
      continue;
    }
    RelevanceVector v = a.ToRelevanceVector();
    if (config_.binarize_threshold && v.label_kind == LabelKind::kGraded) {
      v = Binarize(v, *config_.binarize_threshold);
    }
    RetrievalScoreRow row{a.query_id, a.scheme, v.label_kind,
                          EvaluateList(v, config_.metrics)};
    lines.push_back(RetrievalScoreToJson(row));
    ++summary.records_written;
  }
  WriteFileAtomic(OutPath(kRetrievalScoresFile), JoinLines(lines));
  timer.Finish();
  RecordTiming(summary);
  return summary;
}

PhaseSummary Pipeline::EndToEnd() {
  PhaseSummary summary;
  summary.phase = "e2e";
  PhaseTimer timer(summary, diagnostics_);
  const Inputs& in = LoadInputs();
  GenerationBackend& backend = MainBackend();
  const PromptTemplate& prompt = config_.generation_template;
  const DownstreamMetric metric = config_.MakeDownstreamMetric();
  const std::size_t k = config_.e2e_k.value_or(config_.depth);

  std::vector<const DownstreamExample*> planned;
  std::vector<E2EPlan> plans;
  for (const auto& ex : in.examples) {
    auto it = in.lists.find(ex.query_id);
    if (it == in.lists.end()) continue;
    const RankedList& list = it->second;
    if (list.entries.empty()) continue;
    const std::size_t k_query = std::min(k, list.entries.size());
    if (k_query < k) {
      diagnostics_.Warn("query " + ex.query_id + ": only " +
                        std::to_string(k_query) + " documents retrieved");
    }
    try {
      plans.push_back(PlanE2E(ex, list, in.docs, backend, prompt, k_query));
      planned.push_back(&ex);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kContextOverflow) throw;
      diagnostics_.Warn(e.what());
    }
  }

  std::vector<GenerationRequest> requests;
  requests.reserve(plans.size());
  for (const auto& p : plans) requests.push_back(p.request);
  Generator generator(backend, &Cache(),
                      {config_.backend.max_parallel, config_.fail_fast},
                      &diagnostics_);
  const auto outcomes = generator.GenerateBatch(prompt, requests);
  summary.backend_calls = generator.new_calls();

  bool failed = false;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    if (!outcomes[i].ok()) {
      failed = true;
      diagnostics_.Warn("query " + planned[i]->query_id +
                        ": end-to-end generation failed: " +
                        outcomes[i].error_message);
      continue;
    }
    const E2EResult result =
        ScoreE2E(*planned[i], plans[i], *outcomes[i].result, metric);
    if (result.truncated) {
      diagnostics_.Warn("query " + result.query_id + ": truncated to " +
                        std::to_string(result.k_used) +
                        " documents to fit the context limit");
    }
    lines.push_back(E2EToJson(result, backend.backend_id(), prompt.template_id));
    ++summary.records_written;
  }
  WriteFileAtomic(OutPath(kE2EFile), JoinLines(lines));
  timer.Finish();
  RecordTiming(summary);
  if (failed && config_.fail_fast) {
    throw Error(ErrorCode::kBackendUnavailable,
                "end-to-end evaluation aborted after a generation failure "
                "(--fail-fast)");
  }
  return summary;
}

PhaseSummary Pipeline::Correlate() {
  PhaseSummary summary;
  summary.phase = "correlate";
  PhaseTimer timer(summary, diagnostics_);
  const auto scores_path = OutPath(kRetrievalScoresFile);
  const auto e2e_path = OutPath(kE2EFile);
  RequireFile(scores_path, "evaluate");
  RequireFile(e2e_path, "e2e");

  const auto rows = ReadJsonl(scores_path, &RetrievalScoreFromJson);
  const auto e2e_results = ReadJsonl(e2e_path, &E2EFromJson);
  std::map<std::string, E2EResult> e2e;
  CostRecord e2e_cost;
  for (const auto& r : e2e_results) {
    e2e_cost += r.cost;
    e2e.emplace(r.query_id, r);
  }

  std::map<AnnotationScheme, CostRecord> annotation_cost;
  std::set<std::string> annotation_backends;
  std::size_t judge_parse_failures = 0;
  const auto annotations_path = OutPath(kAnnotationsFile);
  if (std::filesystem::exists(annotations_path)) {
    for (const auto& a : ReadJsonl(annotations_path, &AnnotationFromJson)) {
      if (!Contains(config_.schemes, a.scheme)) continue;
      annotation_cost[a.scheme] += a.cost;
      if (!a.backend_id.empty()) annotation_backends.insert(a.backend_id);
      if (a.scheme == AnnotationScheme::kLlmJudge) {
        judge_parse_failures += a.parse_failures;
      }
    }
  }

  // scheme -> metric -> query -> score
  std::map<AnnotationScheme, std::map<std::string, std::map<std::string, double>>>
      table;
  std::set<std::pair<AnnotationScheme, std::string>> evaluated;
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      evaluated.emplace(row.scheme, cell.metric.ToString());
      if (cell.value) {
        table[row.scheme][cell.metric.ToString()][row.query_id] = *cell.value;
      }
    }
  }

  if (!rows.empty()) {
    for (AnnotationScheme scheme : config_.schemes) {
      for (const auto& metric : config_.metrics) {
        if (!evaluated.contains({scheme, metric.ToString()})) {
          throw Error(ErrorCode::kNotFound,
                      scores_path.string() + " has no " + metric.ToString() +
                          " scores for scheme " +
                          std::string(SchemeName(scheme)) +
                          "; rerun evaluate with the same schemes and metrics");
        }
      }
    }
  }

  std::vector<std::string> csv{
      "scheme,metric,cutoff,tau,rho,n,tied_pairs_x,tied_pairs_y,status"};
  ordered_json correlation_rows = ordered_json::array();
  for (AnnotationScheme scheme : config_.schemes) {
    for (const auto& metric : config_.metrics) {
      const std::string key = metric.ToString();
      ordered_json row = {{"scheme", SchemeName(scheme)},
                          {"metric", RankingMetricNameString(metric.name)},
                          {"cutoff", metric.cutoff.ToString()}};
      std::string line = std::string(SchemeName(scheme)) + "," +
                         std::string(RankingMetricNameString(metric.name)) +
                         "," + metric.cutoff.ToString() + ",";
      try {
        const auto& scores = table[scheme][key];
        const CorrelationResult c = CorrelateRun(scores, e2e);
        row["tau"] = c.tau;
        row["rho"] = c.rho;
        row["n"] = c.n;
        row["tied_pairs_x"] = c.tied_pairs_x;
        row["tied_pairs_y"] = c.tied_pairs_y;
        row["status"] = "ok";
        line += FormatDouble(c.tau) + "," + FormatDouble(c.rho) + "," +
                std::to_string(c.n) + "," + std::to_string(c.tied_pairs_x) +
                "," + std::to_string(c.tied_pairs_y) + ",ok";
      } catch (const Error& e) {
        row["tau"] = nullptr;
        row["rho"] = nullptr;
        row["n"] = nullptr;
        row["tied_pairs_x"] = nullptr;
        row["tied_pairs_y"] = nullptr;
        row["status"] = "NA:" + std::string(ErrorCodeName(e.code()));
        line += "NA,NA,NA,NA,NA,NA:" + std::string(ErrorCodeName(e.code()));
      }
      csv.push_back(std::move(line));
      correlation_rows.push_back(std::move(row));
      ++summary.records_written;
    }
  }
  WriteFileAtomic(OutPath(kCorrelationsCsv), JoinLines(csv));
  const ordered_json correlations = {{"tau_variant", "tau-b"},
                                     {"rho_variant", "spearman-average-ranks"},
                                     {"rows", correlation_rows}};
  WriteFileAtomic(OutPath(kCorrelationsJson), correlations.dump(2) + "\n");

  // Per-query table: one column per (scheme, metric).
  std::vector<std::string> columns;
  for (AnnotationScheme scheme : config_.schemes) {
    for (const auto& metric : config_.metrics) {
      columns.push_back(std::string(SchemeName(scheme)) + ":" +
                        metric.ToString());
    }
  }
  std::set<std::string> query_ids;
  for (const auto& row : rows) query_ids.insert(row.query_id);
  for (const auto& [qid, r] : e2e) query_ids.insert(qid);
  std::vector<std::string> per_query_csv;
  {
    std::string header = "query_id,downstream_score";
    for (const auto& c : columns) header += "," + CsvField(c);
    per_query_csv.push_back(std::move(header));
  }
  ordered_json per_query = ordered_json::array();
  for (const auto& qid : query_ids) {
    ordered_json entry = {{"query_id", qid}};
    std::string line = CsvField(qid) + ",";
    auto e = e2e.find(qid);
    if (e != e2e.end()) {
      entry["downstream_score"] = e->second.downstream_score;
      entry["e2e_cost"] = CostJson(e->second.cost);
      line += FormatDouble(e->second.downstream_score);
    } else {
      entry["downstream_score"] = nullptr;
    }
    ordered_json retrieval = ordered_json::object();
    for (AnnotationScheme scheme : config_.schemes) {
      ordered_json by_metric = ordered_json::object();
      for (const auto& metric : config_.metrics) {
        const auto& scores = table[scheme][metric.ToString()];
        auto it = scores.find(qid);
        line += ",";
        if (it != scores.end()) {
          by_metric[metric.ToString()] = it->second;
          line += FormatDouble(it->second);
        } else {
          by_metric[metric.ToString()] = nullptr;
        }
      }
      retrieval[std::string(SchemeName(scheme))] = std::move(by_metric);
    }
    entry["retrieval"] = std::move(retrieval);
    per_query.push_back(std::move(entry));
    per_query_csv.push_back(std::move(line));
  }
  WriteFileAtomic(OutPath(kPerQueryCsv), JoinLines(per_query_csv));

  ordered_json cost = ordered_json::object();
  for (const auto& [scheme, c] : annotation_cost) {
    cost[std::string(SchemeName(scheme))] = CostJson(c);
  }
  cost["e2e"] = CostJson(e2e_cost);
  const auto erag_it = annotation_cost.find(AnnotationScheme::kErag);
  if (erag_it != annotation_cost.end() &&
      erag_it->second.simulated_flops > 0.0 && e2e_cost.simulated_flops > 0.0) {
    cost["e2e_to_erag_flops_ratio"] =
        e2e_cost.simulated_flops / erag_it->second.simulated_flops;
  } else {
    cost["e2e_to_erag_flops_ratio"] = nullptr;
  }

  ordered_json report = {
      {"schema_version", kConfigSchemaVersion},
      {"config_hash", config_.Hash()},
      {"config", ordered_json::parse(config_.ToJson(false))},
      {"tau_variant", "tau-b"},
      {"judge_template_canonical", false},
      {"annotation_backend_ids",
       std::vector<std::string>(annotation_backends.begin(),
                                annotation_backends.end())},
      {"judge_parse_failures", judge_parse_failures},
      {"correlations", correlation_rows},
      {"cost", cost},
      {"per_query", per_query},
  };
  WriteFileAtomic(OutPath(kReportJson), report.dump(2) + "\n");

  timer.Finish();
  RecordTiming(summary);
  return summary;
}

std::vector<PhaseSummary> Pipeline::RunAll() {
  std::vector<PhaseSummary> summaries;
  summaries.push_back(Annotate());
  summaries.push_back(Evaluate());
  summaries.push_back(EndToEnd());
  summaries.push_back(Correlate());
  return summaries;
}

std::string Pipeline::RenderSummary() const {
  const auto path = OutPath(kReportJson);
  RequireFile(path, "correlate");
  const auto report = ordered_json::parse(ReadFile(path));
  std::ostringstream out;
  out << "config " << report["config_hash"].get<std::string>().substr(0, 12)
      << "  (tau variant: " << report["tau_variant"].get<std::string>()
      << ")\n\n";
  out << "scheme        metric       cutoff         tau       rho      n\n";
  for (const auto& row : report["correlations"]) {
    const auto num = [](const ordered_json& v) {
      if (v.is_null()) return std::string("NA");
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.4f", v.get<double>());
      return std::string(buffer);
    };
    const std::string n =
        row["n"].is_null() ? "NA" : std::to_string(row["n"].get<std::size_t>());
    char line[200];
    std::snprintf(line, sizeof(line), "%-13s %-12s %-8s %9s %9s %6s\n",
                  row["scheme"].get<std::string>().c_str(),
                  row["metric"].get<std::string>().c_str(),
                  row["cutoff"].get<std::string>().c_str(),
                  num(row["tau"]).c_str(), num(row["rho"]).c_str(), n.c_str());
    out << line;
  }
  const auto& cost = report["cost"];
  out << "\nsimulated cost (flops):";
  for (const auto& [name, value] : cost.items()) {
    if (value.is_object()) {
      out << "  " << name << "=" << FormatDouble(value["simulated_flops"].get<double>());
    }
  }
  out << "\ne2e / erag cost ratio: "
      << (cost["e2e_to_erag_flops_ratio"].is_null()
              ? std::string("NA")
              : FormatDouble(cost["e2e_to_erag_flops_ratio"].get<double>()))
      << "\n";
  return out.str();
}

}  // namespace erag
