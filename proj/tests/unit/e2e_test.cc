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


#include "erag/e2e.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "erag/annotators.hpp"
#include "erag/error.hpp"
#include "erag/mock_backend.hpp"
#include "testing/fixtures.hpp"

namespace erag {
namespace {

using testing::Words;

struct Setup {
  DownstreamExample example;
  RankedList list;
  DocumentStore docs;
};

Setup MakeSetup(std::size_t n, std::size_t words = 10) {
  Setup s;
  s.example.query_id = "q1";
  s.example.query_text = "who";
  s.example.gold_outputs = {"gold"};
  s.list.query_id = "q1";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "d" + std::to_string(i);
    s.list.entries.push_back({id, 1.0 / static_cast<double>(i + 1)});
    s.docs.Add({id, "", Words(words), std::nullopt});
  }
  return s;
}

PromptTemplate Plain() {
  PromptTemplate t;
  t.template_id = "plain";
  t.body = "{documents}";
  t.document_separator = " ";
  return t;
}

const DownstreamMetric kEm(DownstreamMetricKind::kExactMatch);

TEST(E2ETest, FullSetKeyYieldsGold) {
  auto s = MakeSetup(3);
  auto backend = MockFromOracle({{{"q1", {"d0", "d1", "d2"}}, "gold"}});
  Generator gen(*backend, nullptr);
  const auto r = EvaluateE2E(s.example, s.list, s.docs, gen,
                             DefaultGenerationTemplate(), kEm, 3);
  EXPECT_EQ(r.downstream_score, 1.0);
  EXPECT_EQ(r.k_used, 3u);
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(backend->call_count(), 1u);
  const auto r2 = EvaluateE2E(s.example, s.list, s.docs, gen,
                              DefaultGenerationTemplate(), kEm, 2);
  EXPECT_EQ(r2.downstream_score, 0.0);
}

TEST(E2ETest, KOutsideRangeRejected) {
  auto s = MakeSetup(3);
  auto backend = MockFromOracle(MockOracle{});
  Generator gen(*backend, nullptr);
  EXPECT_THROW(EvaluateE2E(s.example, s.list, s.docs, gen, Plain(), kEm, 0),
               Error);
  EXPECT_THROW(EvaluateE2E(s.example, s.list, s.docs, gen, Plain(), kEm, 4),
               Error);
}

TEST(E2ETest, PromptListsDocumentsInRankOrder) {
  auto s = MakeSetup(3);
  std::vector<std::string> seen;
  MockBackend backend("m", [&](const BackendRequest& r) {
    seen = r.doc_ids;
    return std::string("x");
  });
  Generator gen(backend, nullptr);
  EvaluateE2E(s.example, s.list, s.docs, gen, Plain(), kEm, 3);
  EXPECT_EQ(seen, (std::vector<std::string>{"d0", "d1", "d2"}));
}

TEST(E2ETest, TruncatesToLargestFittingPrefix) {
  auto s = MakeSetup(50, 10);
  MockBackend::Options options;
  options.context_limit = 370;
  auto backend = MockFromOracle(MockOracle{}, "unknown", options);
  Generator gen(*backend, nullptr);
  const auto r = EvaluateE2E(s.example, s.list, s.docs, gen, Plain(), kEm, 50);
  EXPECT_EQ(r.k_used, 37u);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.cost.prompt_tokens, 370u);
}

TEST(E2ETest, SingleOversizedDocumentOverflows) {
  auto s = MakeSetup(2, 100);
  MockBackend::Options options;
  options.context_limit = 50;
  auto backend = MockFromOracle(MockOracle{}, "unknown", options);
  Generator gen(*backend, nullptr);
  try {
    EvaluateE2E(s.example, s.list, s.docs, gen, Plain(), kEm, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kContextOverflow);
  }
}

TEST(E2ETest, KOneMatchesEragLabel) {
  auto s = MakeSetup(6);
  MockOracle oracle;
  oracle.AddExact("q1", {"d2"}, "gold");
  oracle.AddExact("q1", {"d4"}, "Gold.");
  auto backend = MockFromOracle(oracle);
  Generator gen(*backend, nullptr);
  const auto labels = AnnotateErag(s.example, s.list, s.docs, gen,
                                   DefaultGenerationTemplate(), kEm)
                          .ToRelevanceVector()
                          .labels;
  for (std::size_t i = 0; i < s.list.entries.size(); ++i) {
    RankedList single;
    single.query_id = "q1";
    single.entries = {s.list.entries[i]};
    const auto r = EvaluateE2E(s.example, single, s.docs, gen,
                               DefaultGenerationTemplate(), kEm, 1);
    EXPECT_EQ(r.downstream_score, labels[i]);
  }
}

TEST(E2ETest, Deterministic) {
  auto s = MakeSetup(5);
  MockOracle oracle;
  oracle.AddAnyOf({"q1", {"d3"}, "gold", std::nullopt});
  auto run = [&] {
    auto backend = MockFromOracle(oracle);
    Generator gen(*backend, nullptr);
    return EvaluateE2E(s.example, s.list, s.docs, gen,
                       DefaultGenerationTemplate(), kEm, 5);
  };
  const auto a = run();
  const auto b = run();
  EXPECT_EQ(a.generated, b.generated);
  EXPECT_EQ(a.downstream_score, b.downstream_score);
  EXPECT_EQ(a.cost, b.cost);
  EXPECT_EQ(a.downstream_score, 1.0);
}

TEST(E2ETest, CostExceedsSummedSingleDocCost) {
  for (std::size_t k : {2u, 5u, 20u}) {
    auto s = MakeSetup(k, 30);
    auto backend = MockFromOracle(MockOracle{}, "same answer");
    Generator gen(*backend, nullptr);
    const auto erag = AnnotateErag(s.example, s.list, s.docs, gen, Plain(), kEm);
    const auto e2e = EvaluateE2E(s.example, s.list, s.docs, gen, Plain(), kEm, k);
    EXPECT_GT(e2e.cost.simulated_flops, erag.cost.simulated_flops);
  }
}

}  // namespace
}  // namespace erag
