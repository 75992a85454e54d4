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


#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "erag/config.hpp"
#include "erag/error.hpp"
#include "erag/http_backend.hpp"
#include "erag/records.hpp"
#include "erag/text.hpp"
#include "testing/fixtures.hpp"

namespace erag {
namespace {

TEST(ConfigTest, MinimalDocumentGetsDefaults) {
  const auto c = RunConfig::FromJson(R"({"schema_version": 1})");
  EXPECT_EQ(c.depth, 50u);
  EXPECT_EQ(c.metrics.size(), 6u);
  EXPECT_EQ(c.schemes, std::vector<AnnotationScheme>{AnnotationScheme::kErag});
  EXPECT_EQ(c.backend.kind, "mock");
  EXPECT_EQ(c.generation_template.template_id,
            DefaultGenerationTemplate().template_id);
}

TEST(ConfigTest, SchemaVersionRequired) {
  EXPECT_THROW(RunConfig::FromJson("{}"), Error);
  EXPECT_THROW(RunConfig::FromJson(R"({"schema_version": 2})"), Error);
  EXPECT_THROW(RunConfig::FromJson("not json"), Error);
}

TEST(ConfigTest, RejectsUnknownValues) {
  EXPECT_THROW(
      RunConfig::FromJson(R"({"schema_version": 1, "backend": {"kind": "x"}})"),
      Error);
  EXPECT_THROW(
      RunConfig::FromJson(R"({"schema_version": 1, "schemes": ["bm25"]})"),
      Error);
  EXPECT_THROW(
      RunConfig::FromJson(R"({"schema_version": 1, "metrics": ["ndcg@0"]})"),
      Error);
}

TEST(ConfigTest, RoundTripAndHash) {
  const std::string text = R"({
    "schema_version": 1,
    "dataset": {"path": "d.jsonl", "task": "classification",
                "label_set": ["SUPPORTS", "REFUTES"]},
    "corpus": {"path": "c.jsonl", "max_words": 80, "separator": " | "},
    "run": {"path": "r.txt", "depth": 10},
    "e2e_k": 5,
    "schemes": ["erag", "provenance", "llm_judge"],
    "metrics": ["ndcg@10", "map"],
    "downstream_metric": "accuracy",
    "binarize_threshold": 0.5,
    "backend": {"kind": "http", "endpoint": "http://localhost:9", "model": "m",
                "retry": {"max_attempts": 4, "base_backoff_ms": 10}},
    "judge_backend": {"kind": "mock", "mock_fallback": "not relevant"},
    "templates": {"generation": {"template_id": "g2", "body": "{query} {documents}"}},
    "cache_dir": "c1", "out_dir": "o1", "seed": 99
  })";
  const auto c = RunConfig::FromJson(text, "/base");
  EXPECT_EQ(c.task, TaskType::kClassification);
  EXPECT_EQ(c.segmentation.separator, " | ");
  EXPECT_EQ(c.e2e_k, 5u);
  EXPECT_EQ(c.schemes.size(), 3u);
  EXPECT_EQ(c.metrics[1].ToString(), "map@full");
  EXPECT_EQ(c.backend.retry.max_attempts, 4);
  EXPECT_EQ(c.backend.retry.base_backoff.count(), 10);
  ASSERT_TRUE(c.judge_backend.has_value());
  EXPECT_EQ(c.judge_backend->mock_fallback, "not relevant");
  EXPECT_EQ(c.generation_template.template_id, "g2");
  EXPECT_EQ(c.binarize_threshold, 0.5);
  EXPECT_EQ(c.Resolve("x"), std::filesystem::path("/base/x"));
  EXPECT_EQ(c.Resolve("/abs"), std::filesystem::path("/abs"));

  const auto again = RunConfig::FromJson(c.ToJson(), "/base");
  EXPECT_EQ(again.ToJson(), c.ToJson());
  EXPECT_EQ(again.Hash(), c.Hash());

  auto moved = c;
  moved.cache_dir = "elsewhere";
  moved.out_dir = "other";
  EXPECT_EQ(moved.Hash(), c.Hash());
  EXPECT_NE(moved.ToJson(), c.ToJson());
  moved.depth = 11;
  EXPECT_NE(moved.Hash(), c.Hash());
}

TEST(ConfigTest, ApiKeyNeverSerialized) {
  ::setenv("ERAG_TEST_KEY", "sk-secret-value", 1);
  auto c = RunConfig::FromJson(R"({"schema_version": 1,
    "backend": {"kind": "http", "endpoint": "http://127.0.0.1:1",
                "model": "m", "api_key_env": "ERAG_TEST_KEY"}})");
  auto backend = MakeBackend(c.backend, c);
  EXPECT_EQ(backend->kind(), BackendKind::kHttpOpenAiCompatible);
  EXPECT_EQ(c.ToJson().find("sk-secret-value"), std::string::npos);
  EXPECT_NE(c.ToJson().find("ERAG_TEST_KEY"), std::string::npos);
}

TEST(ConfigTest, MockBackendFromOracleFile) {
  testing::TempDir dir;
  WriteFileAtomic(dir / "o.jsonl",
                  R"({"query_id": "q", "doc_ids": ["d"], "answer": "yes"})");
  auto c = RunConfig::FromJson(
      R"({"schema_version": 1, "backend": {"mock_oracle": "o.jsonl"}})",
      dir.path());
  auto backend = MakeBackend(c.backend, c);
  EXPECT_EQ(backend->Complete({"q", {"d"}, "t", "", "p"}).text, "yes");
  EXPECT_EQ(backend->Complete({"q", {"e"}, "t", "", "p"}).text, "unknown");
}

TEST(RecordsTest, AnnotationRoundTrip) {
  AnnotationResult a;
  a.query_id = "q1";
  a.scheme = AnnotationScheme::kLlmJudge;
  a.label_kind = LabelKind::kBinary;
  a.doc_ids = {"d1", "d2", "d3"};
  a.labels = {1.0, std::nullopt, 0.0};
  a.backend_id = "mock:abc";
  a.template_id = "judge-v1";
  a.parse_failures = 2;
  a.cost = {10, 2, 200.0};
  const std::string line = AnnotationToJson(a);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto b = AnnotationFromJson(line);
  EXPECT_EQ(b.query_id, a.query_id);
  EXPECT_EQ(b.scheme, a.scheme);
  EXPECT_EQ(b.doc_ids, a.doc_ids);
  EXPECT_EQ(b.labels, a.labels);
  EXPECT_EQ(b.backend_id, a.backend_id);
  EXPECT_EQ(b.template_id, a.template_id);
  EXPECT_EQ(b.parse_failures, 2u);
  EXPECT_EQ(b.cost, a.cost);
  EXPECT_EQ(AnnotationToJson(b), line);
}

TEST(RecordsTest, E2ERoundTrip) {
  E2EResult r;
  r.query_id = "q";
  r.generated = "some \"text\"";
  r.downstream_score = 0.25;
  r.k_used = 37;
  r.truncated = true;
  r.cost = {100, 5, 50000.0};
  const auto line = E2EToJson(r, "b", "t");
  const auto back = E2EFromJson(line);
  EXPECT_EQ(back.generated, r.generated);
  EXPECT_EQ(back.downstream_score, 0.25);
  EXPECT_EQ(back.k_used, 37u);
  EXPECT_TRUE(back.truncated);
  EXPECT_EQ(back.cost, r.cost);
  EXPECT_EQ(E2EToJson(back, "b", "t"), line);
}

TEST(RecordsTest, RetrievalScoreRowKeepsSkips) {
  RetrievalScoreRow row;
  row.query_id = "q";
  row.scheme = AnnotationScheme::kErag;
  row.label_kind = LabelKind::kGraded;
  const auto metrics = ParseMetricList("precision,ndcg@3");
  row.cells = EvaluateList(
      {"q", {0.5, 1.0, 0.0}, AnnotationScheme::kErag, LabelKind::kGraded},
      metrics);
  const auto line = RetrievalScoreToJson(row);
  const auto back = RetrievalScoreFromJson(line);
  ASSERT_EQ(back.cells.size(), 2u);
  EXPECT_DOUBLE_EQ(*back.cells[0].value, 0.5);
  EXPECT_FALSE(back.cells[1].value.has_value());
  EXPECT_EQ(back.cells[1].skip_reason, "unsupported_label_kind");
  EXPECT_EQ(RetrievalScoreToJson(back), line);
}

TEST(RecordsTest, ReadJsonlReportsLine) {
  testing::TempDir dir;
  E2EResult r;
  r.query_id = "q";
  WriteFileAtomic(dir / "e.jsonl", E2EToJson(r, "b", "t") + "\n{broken\n");
  try {
    ReadJsonl<E2EResult>(dir / "e.jsonl", &E2EFromJson);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace erag
