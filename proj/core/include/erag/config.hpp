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

#ifndef ERAG_CONFIG_HPP_
#define ERAG_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erag/backend.hpp"
#include "erag/downstream_metrics.hpp"
#include "erag/http_backend.hpp"
#include "erag/ingestion.hpp"
#include "erag/prompt.hpp"
#include "erag/ranking_metrics.hpp"

namespace erag {

inline constexpr int kConfigSchemaVersion = 1;

struct BackendConfig {
  std::string kind = "mock";  // "mock" | "http"
  std::string endpoint;
  std::string model;
  std::string api_key_env = "OPENAI_API_KEY";
  std::size_t max_parallel = 8;
  RetryPolicy retry;
  double temperature = 0.0;
  int max_tokens = 64;
  int timeout_seconds = 60;
  std::optional<std::size_t> context_limit;
  std::string mock_oracle;  // JSONL oracle file for kind=mock
  std::string mock_fallback = "unknown";
};

// Everything needed to replay a run. Relative paths are resolved against
// `base_dir`, which is not serialized.
struct RunConfig {
  int schema_version = kConfigSchemaVersion;

  std::string dataset_path;
  std::string dataset_format = "kilt_jsonl";
  TaskType task = TaskType::kExtractiveQa;
  std::vector<std::string> label_set;

  std::string corpus_path;
  SegmentationOptions segmentation;

  std::string run_path;
  std::size_t depth = 50;
  std::optional<std::size_t> e2e_k;  // defaults to depth

  std::vector<AnnotationScheme> schemes{AnnotationScheme::kErag};
  std::vector<RankingMetric> metrics;
  DownstreamMetricKind downstream_metric = DownstreamMetricKind::kExactMatch;
  NormalizationPolicy normalization;
  std::optional<double> binarize_threshold;

  BackendConfig backend;
  std::optional<BackendConfig> judge_backend;
  PromptTemplate generation_template = DefaultGenerationTemplate();
  PromptTemplate judge_template = DefaultJudgeTemplate();

  std::string cache_dir = "cache";
  std::string out_dir = "out";
  bool fail_fast = false;
  std::uint64_t seed = 0;

  std::filesystem::path base_dir;

  static RunConfig FromJson(std::string_view text,
                            std::filesystem::path base_dir = {});
  static RunConfig Load(const std::filesystem::path& path);

  // Pretty-printed, key order fixed. `include_locations` controls whether
  // cache_dir and out_dir are emitted.
  std::string ToJson(bool include_locations = true) const;

  // SHA-256 of ToJson(false): identical across output locations.
  std::string Hash() const;

  std::filesystem::path Resolve(const std::string& path) const;
  DownstreamMetric MakeDownstreamMetric() const;
};

// Builds the backend described by `config`; the API key is read from the
// environment variable named in the config.
std::unique_ptr<GenerationBackend> MakeBackend(const BackendConfig& config,
                                               const RunConfig& run);

}  // namespace erag

#endif  // ERAG_CONFIG_HPP_
