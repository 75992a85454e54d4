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

#include "erag/config.hpp"

#include <cstdlib>

#include "erag/error.hpp"
#include "erag/hashing.hpp"
#include "erag/mock_backend.hpp"
#include "erag/text.hpp"
#include "json.hpp"

namespace erag {
namespace {

using nlohmann::ordered_json;

ordered_json TemplateToJson(const PromptTemplate& t) {
  return {{"template_id", t.template_id},
          {"instruction_header", t.instruction_header},
          {"body", t.body},
          {"document_format", t.document_format},
          {"document_separator", t.document_separator}};
}

PromptTemplate TemplateFromJson(const ordered_json& j, PromptTemplate base) {
  base.template_id = j.value("template_id", base.template_id);
  base.instruction_header = j.value("instruction_header", base.instruction_header);
  base.body = j.value("body", base.body);
  base.document_format = j.value("document_format", base.document_format);
  base.document_separator = j.value("document_separator", base.document_separator);
  if (base.template_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "template_id must not be empty");
  }
  return base;
}

ordered_json BackendToJson(const BackendConfig& b) {
  ordered_json j = {
      {"kind", b.kind},
      {"endpoint", b.endpoint},
      {"model", b.model},
      {"api_key_env", b.api_key_env},
      {"max_parallel", b.max_parallel},
      {"retry",
       {{"max_attempts", b.retry.max_attempts},
        {"base_backoff_ms", b.retry.base_backoff.count()},
        {"multiplier", b.retry.backoff_multiplier}}},
      {"temperature", b.temperature},
      {"max_tokens", b.max_tokens},
      {"timeout_seconds", b.timeout_seconds},
      {"context_limit", b.context_limit ? ordered_json(*b.context_limit)
                                        : ordered_json(nullptr)},
      {"mock_oracle", b.mock_oracle},
      {"mock_fallback", b.mock_fallback},
  };
  return j;
}

BackendConfig BackendFromJson(const ordered_json& j) {
  BackendConfig b;
  b.kind = j.value("kind", b.kind);
  if (b.kind != "mock" && b.kind != "http") {
    throw Error(ErrorCode::kInvalidArgument,
                "backend kind must be 'mock' or 'http', got '" + b.kind + "'");
  }
  b.endpoint = j.value("endpoint", b.endpoint);
  b.model = j.value("model", b.model);
  b.api_key_env = j.value("api_key_env", b.api_key_env);
  b.max_parallel = j.value("max_parallel", b.max_parallel);
  if (j.contains("retry")) {
    const auto& r = j["retry"];
    b.retry.max_attempts = r.value("max_attempts", b.retry.max_attempts);
    b.retry.base_backoff = std::chrono::milliseconds(
        r.value("base_backoff_ms", static_cast<long long>(b.retry.base_backoff.count())));
    b.retry.backoff_multiplier = r.value("multiplier", b.retry.backoff_multiplier);
  }
  b.temperature = j.value("temperature", b.temperature);
  b.max_tokens = j.value("max_tokens", b.max_tokens);
  b.timeout_seconds = j.value("timeout_seconds", b.timeout_seconds);
  if (j.contains("context_limit") && !j["context_limit"].is_null()) {
    b.context_limit = j["context_limit"].get<std::size_t>();
  }
  b.mock_oracle = j.value("mock_oracle", b.mock_oracle);
  b.mock_fallback = j.value("mock_fallback", b.mock_fallback);
  return b;
}

}  // namespace

RunConfig RunConfig::FromJson(std::string_view text,
                              std::filesystem::path base_dir) {
  RunConfig c;
  c.base_dir = std::move(base_dir);
  try {
    const auto j = ordered_json::parse(text);
    c.schema_version = j.at("schema_version").get<int>();
    if (c.schema_version != kConfigSchemaVersion) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unsupported config schema_version " +
                      std::to_string(c.schema_version));
    }
    if (j.contains("dataset")) {
      const auto& d = j["dataset"];
      c.dataset_path = d.value("path", c.dataset_path);
      c.dataset_format = d.value("format", c.dataset_format);
      c.task = ParseTaskType(d.value("task", std::string("extractive_qa")));
      c.label_set = d.value("label_set", c.label_set);
    }
    if (c.dataset_format != "kilt_jsonl") {
      throw Error(ErrorCode::kInvalidArgument,
                  "unsupported dataset format '" + c.dataset_format + "'");
    }
    if (j.contains("corpus")) {
      const auto& d = j["corpus"];
      c.corpus_path = d.value("path", c.corpus_path);
      c.segmentation.max_words = d.value("max_words", c.segmentation.max_words);
      c.segmentation.separator = d.value("separator", c.segmentation.separator);
    }
    if (j.contains("run")) {
      const auto& d = j["run"];
      c.run_path = d.value("path", c.run_path);
      c.depth = d.value("depth", c.depth);
    }
    if (j.contains("e2e_k") && !j["e2e_k"].is_null()) {
      c.e2e_k = j["e2e_k"].get<std::size_t>();
    }
    if (j.contains("schemes")) {
      c.schemes.clear();
      for (const auto& s : j["schemes"]) {
        c.schemes.push_back(ParseScheme(s.get<std::string>()));
      }
    }
    if (j.contains("metrics")) {
      for (const auto& m : j["metrics"]) {
        c.metrics.push_back(RankingMetric::Parse(m.get<std::string>()));
      }
    }
    c.downstream_metric = ParseDownstreamMetric(
        j.value("downstream_metric", std::string("exact_match")));
    if (j.contains("normalization")) {
      const auto& n = j["normalization"];
      c.normalization.lowercase = n.value("lowercase", true);
      c.normalization.strip_punctuation = n.value("strip_punctuation", true);
      c.normalization.strip_articles = n.value("strip_articles", true);
      c.normalization.collapse_whitespace = n.value("collapse_whitespace", true);
    }
    if (j.contains("binarize_threshold") && !j["binarize_threshold"].is_null()) {
      c.binarize_threshold = j["binarize_threshold"].get<double>();
    }
    if (j.contains("backend")) c.backend = BackendFromJson(j["backend"]);
    if (j.contains("judge_backend") && !j["judge_backend"].is_null()) {
      c.judge_backend = BackendFromJson(j["judge_backend"]);
    }
    if (j.contains("templates")) {
      const auto& t = j["templates"];
      if (t.contains("generation")) {
        c.generation_template = TemplateFromJson(t["generation"], c.generation_template);
      }
      if (t.contains("judge")) {
        c.judge_template = TemplateFromJson(t["judge"], c.judge_template);
      }
    }
    c.cache_dir = j.value("cache_dir", c.cache_dir);
    c.out_dir = j.value("out_dir", c.out_dir);
    c.fail_fast = j.value("fail_fast", c.fail_fast);
    c.seed = j.value("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad config: ") + e.what());
  }
  if (c.depth == 0) {
    throw Error(ErrorCode::kInvalidArgument, "run depth must be positive");
  }
  if (c.metrics.empty()) {
    c.metrics = ParseMetricList(
        "precision@full,recall@full,map@full,mrr@full,ndcg@full,hit_ratio@full");
  }
  return c;
}

RunConfig RunConfig::Load(const std::filesystem::path& path) {
  return FromJson(ReadFile(path), path.parent_path());
}

std::string RunConfig::ToJson(bool include_locations) const {
  ordered_json schemes_json = ordered_json::array();
  for (auto s : schemes) schemes_json.push_back(SchemeName(s));
  ordered_json metrics_json = ordered_json::array();
  for (const auto& m : metrics) metrics_json.push_back(m.ToString());
  ordered_json j = {
      {"schema_version", schema_version},
      {"dataset",
       {{"path", dataset_path},
        {"format", dataset_format},
        {"task", TaskTypeName(task)},
        {"label_set", label_set}}},
      {"corpus",
       {{"path", corpus_path},
        {"max_words", segmentation.max_words},
        {"separator", segmentation.separator}}},
      {"run", {{"path", run_path}, {"depth", depth}}},
      {"e2e_k", e2e_k ? ordered_json(*e2e_k) : ordered_json(nullptr)},
      {"schemes", schemes_json},
      {"metrics", metrics_json},
      {"downstream_metric", DownstreamMetricName(downstream_metric)},
      {"normalization",
       {{"lowercase", normalization.lowercase},
        {"strip_punctuation", normalization.strip_punctuation},
        {"strip_articles", normalization.strip_articles},
        {"collapse_whitespace", normalization.collapse_whitespace}}},
      {"binarize_threshold", binarize_threshold
                                 ? ordered_json(*binarize_threshold)
                                 : ordered_json(nullptr)},
      {"backend", BackendToJson(backend)},
      {"judge_backend", judge_backend ? BackendToJson(*judge_backend)
                                      : ordered_json(nullptr)},
      {"templates",
       {{"generation", TemplateToJson(generation_template)},
        {"judge", TemplateToJson(judge_template)}}},
      {"fail_fast", fail_fast},
      {"seed", seed},
  };
  if (include_locations) {
    j["cache_dir"] = cache_dir;
    j["out_dir"] = out_dir;
  }
  return j.dump(2);
}

std::string RunConfig::Hash() const { return Sha256Hex(ToJson(false)); }

std::filesystem::path RunConfig::Resolve(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return p;
  return base_dir / p;
}

DownstreamMetric RunConfig::MakeDownstreamMetric() const {
  return DownstreamMetric(downstream_metric, normalization, label_set);
}

std::unique_ptr<GenerationBackend> MakeBackend(const BackendConfig& config,
                                               const RunConfig& run) {
  if (config.kind == "mock") {
    MockOracle oracle;
    if (!config.mock_oracle.empty()) {
      oracle = MockOracle::Load(run.Resolve(config.mock_oracle));
    }
    MockBackend::Options options;
    options.context_limit = config.context_limit;
    return MockFromOracle(std::move(oracle), config.mock_fallback, options);
  }
  HttpBackendConfig http;
  http.endpoint = config.endpoint;
  http.model = config.model;
  if (!config.api_key_env.empty()) {
    if (const char* key = std::getenv(config.api_key_env.c_str())) {
      http.api_key = key;
    }
  }
  http.temperature = config.temperature;
  http.max_tokens = config.max_tokens;
  http.retry = config.retry;
  http.timeout = std::chrono::seconds(config.timeout_seconds);
  http.context_limit = config.context_limit;
  return std::make_unique<HttpBackend>(std::move(http));
}

}  // namespace erag
