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

#ifndef ERAG_PIPELINE_HPP_
#define ERAG_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erag/backend.hpp"
#include "erag/cache.hpp"
#include "erag/config.hpp"
#include "erag/diagnostics.hpp"
#include "erag/ingestion.hpp"

namespace erag {

// File names inside the output directory.
inline constexpr std::string_view kAnnotationsFile = "annotations.jsonl";
inline constexpr std::string_view kRetrievalScoresFile = "retrieval_scores.jsonl";
inline constexpr std::string_view kE2EFile = "e2e.jsonl";
inline constexpr std::string_view kCorrelationsCsv = "correlations.csv";
inline constexpr std::string_view kCorrelationsJson = "correlations.json";
inline constexpr std::string_view kPerQueryCsv = "per_query.csv";
inline constexpr std::string_view kReportJson = "report.json";
inline constexpr std::string_view kTimingsJson = "timings.json";

struct PhaseSummary {
  std::string phase;
  std::uint64_t backend_calls = 0;  // calls that missed the cache
  std::size_t records_written = 0;
  std::size_t records_reused = 0;
  double wall_seconds = 0.0;
  std::vector<std::string> warnings;
};

// Staged evaluation run. Only Annotate() and EndToEnd() touch a backend;
// each stage reads the previous stage's files from the output directory and
// writes its own atomically. Wall-clock timings go to timings.json so the
// remaining outputs are reproducible byte for byte.
class Pipeline {
 public:
  explicit Pipeline(RunConfig config);
  ~Pipeline();

  // Overrides the backends the config would build.
  void SetBackend(std::shared_ptr<GenerationBackend> backend);
  void SetJudgeBackend(std::shared_ptr<GenerationBackend> backend);

  PhaseSummary Annotate();
  PhaseSummary Evaluate();
  PhaseSummary EndToEnd();
  PhaseSummary Correlate();
  std::vector<PhaseSummary> RunAll();

  // Human-readable digest of report.json.
  std::string RenderSummary() const;

  std::filesystem::path OutPath(std::string_view name) const;
  const RunConfig& config() const { return config_; }

 private:
  struct Inputs;

  const Inputs& LoadInputs();
  GenerationBackend& MainBackend();
  GenerationBackend& JudgeBackend();
  ResponseCache& Cache();
  void RecordTiming(const PhaseSummary& summary) const;

  RunConfig config_;
  std::unique_ptr<Inputs> inputs_;
  std::shared_ptr<GenerationBackend> backend_;
  std::shared_ptr<GenerationBackend> judge_backend_;
  std::unique_ptr<ResponseCache> cache_;
  Diagnostics diagnostics_;
};

}  // namespace erag

#endif  // ERAG_PIPELINE_HPP_
