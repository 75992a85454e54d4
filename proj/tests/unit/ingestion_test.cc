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


#include "erag/ingestion.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "erag/error.hpp"
#include "erag/text.hpp"
#include "testing/fixtures.hpp"

namespace erag {
namespace {

using testing::Words;

TEST(KiltTest, CapturesAllAnswerVariants) {
  const std::string line =
      R"({"id": "q1", "input": "who wrote hamlet", "output": [)"
      R"({"answer": "Shakespeare", "provenance": [{"wikipedia_id": "123"}]},)"
      R"({"answer": "William Shakespeare"}]})";
  auto load = ParseKiltJsonl(line + "\n", "d.jsonl");
  ASSERT_EQ(load.examples.size(), 1u);
  const auto& ex = load.examples[0];
  EXPECT_EQ(ex.query_id, "q1");
  EXPECT_EQ(ex.query_text, "who wrote hamlet");
  ASSERT_EQ(ex.gold_outputs.size(), 2u);
  EXPECT_EQ(ex.gold_outputs[1], "William Shakespeare");
  EXPECT_EQ(ex.provenance_doc_ids, std::vector<std::string>{"123"});
  EXPECT_TRUE(load.warnings.empty());
}

TEST(KiltTest, IntegerIdsAccepted) {
  auto load = ParseKiltJsonl(
      R"({"id": 42, "input": "x", "output": [{"answer": "y"}]})", "d");
  ASSERT_EQ(load.examples.size(), 1u);
  EXPECT_EQ(load.examples[0].query_id, "42");
}

TEST(KiltTest, EmptyFileGivesEmptyList) {
  EXPECT_TRUE(ParseKiltJsonl("", "d").examples.empty());
  EXPECT_TRUE(ParseKiltJsonl("\n\n", "d").examples.empty());
}

TEST(KiltTest, TruncatedLineNamesLineNumber) {
  const std::string contents =
      R"({"id": "a", "input": "x", "output": [{"answer": "y"}]})"
      "\n"
      R"({"id": "b", "input": "x", "outp)";
  try {
    ParseKiltJsonl(contents, "data.jsonl");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.path(), "data.jsonl");
    EXPECT_NE(std::string(e.what()).find("data.jsonl:2"), std::string::npos);
  }
}

TEST(KiltTest, MissingGoldSkippedWithWarning) {
  const std::string contents =
      R"({"id": "a", "input": "x", "output": []})"
      "\n"
      R"({"id": "b", "input": "y", "output": [{"answer": "z"}]})";
  auto load = ParseKiltJsonl(contents, "d");
  ASSERT_EQ(load.examples.size(), 1u);
  EXPECT_EQ(load.examples[0].query_id, "b");
  EXPECT_EQ(load.warnings.size(), 1u);
}

TEST(KiltTest, DuplicateIdRejected) {
  const std::string rec =
      R"({"id": "a", "input": "x", "output": [{"answer": "y"}]})";
  try {
    ParseKiltJsonl(rec + "\n" + rec, "d");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateId);
  }
}

TEST(KiltTest, ClassificationOutsideLabelSetSkipped) {
  DatasetOptions options;
  options.task = TaskType::kClassification;
  options.label_set = {"SUPPORTS", "REFUTES"};
  const std::string contents =
      R"({"id": "a", "input": "x", "output": [{"answer": "SUPPORTS"}]})"
      "\n"
      R"({"id": "b", "input": "y", "output": [{"answer": "MAYBE"}]})";
  auto load = ParseKiltJsonl(contents, "d", options);
  ASSERT_EQ(load.examples.size(), 1u);
  EXPECT_EQ(load.examples[0].task, TaskType::kClassification);
  EXPECT_EQ(load.warnings.size(), 1u);
}

TEST(SegmentTest, SplitsIntoHundredWordPassages) {
  Article a{"A", "T", Words(250)};
  auto docs = SegmentArticle(a);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(CountWhitespaceTokens(PassageBody(docs[0])), 100u);
  EXPECT_EQ(CountWhitespaceTokens(PassageBody(docs[1])), 100u);
  EXPECT_EQ(CountWhitespaceTokens(PassageBody(docs[2])), 50u);
  EXPECT_EQ(docs[0].doc_id, "A-0");
  EXPECT_EQ(docs[2].doc_id, "A-2");
  EXPECT_EQ(docs[2].source_article_id, "A");
  EXPECT_EQ(docs[1].title, "T");
}

TEST(SegmentTest, ExactlyHundredWordsIsOnePassage) {
  EXPECT_EQ(SegmentArticle({"A", "T", Words(100)}).size(), 1u);
}

TEST(SegmentTest, EmptyBodyYieldsNothing) {
  EXPECT_TRUE(SegmentArticle({"A", "T", "   "}).empty());
}

TEST(SegmentTest, ConfiguredSeparatorRoundTrips) {
  SegmentationOptions options;
  options.separator = " [SEP] ";
  auto docs = SegmentArticle({"A", "T", "A"}, options);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].text, "T [SEP] A");
  EXPECT_EQ(PassageBody(docs[0], options), "A");
}

TEST(SegmentTest, DeterministicAndRecoversWords) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Article> articles;
    for (int i = 0; i < 4; ++i) {
      std::string body;
      const int n = static_cast<int>(rng() % 400);
      for (int w = 0; w < n; ++w) {
        body += "tok" + std::to_string(rng() % 50);
        body += (rng() % 5 == 0) ? "\n\t " : " ";
      }
      articles.push_back({"a" + std::to_string(i), "Title " + std::to_string(i),
                          body});
    }
    SegmentationOptions options;
    options.max_words = 1 + rng() % 120;
    const auto first = SegmentCorpus(articles, options);
    const auto second = SegmentCorpus(articles, options);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      EXPECT_EQ(first[i].doc_id, second[i].doc_id);
      EXPECT_EQ(first[i].text, second[i].text);
    }
    for (const auto& article : articles) {
      std::vector<std::string> recovered;
      for (const auto& doc : first) {
        if (doc.source_article_id != article.article_id) continue;
        const auto words = SplitWhitespace(PassageBody(doc, options));
        EXPECT_LE(words.size(), options.max_words);
        recovered.insert(recovered.end(), words.begin(), words.end());
      }
      std::vector<std::string> original;
      for (auto w : SplitWhitespace(article.body)) original.emplace_back(w);
      EXPECT_EQ(recovered, original);
    }
  }
}

TEST(DocumentStoreTest, RejectsDuplicatesAndEmptyText) {
  DocumentStore store;
  store.Add({"d1", "", "text", std::nullopt});
  EXPECT_NE(store.Find("d1"), nullptr);
  EXPECT_EQ(store.Find("d2"), nullptr);
  EXPECT_THROW(store.Add({"d1", "", "other", std::nullopt}), Error);
  EXPECT_THROW(store.Add({"d3", "", "", std::nullopt}), Error);
}

TEST(RunFileTest, ParsesSingleQuery) {
  const std::string run =
      "q1 Q0 d1 1 3.5 bm25\n"
      "q1 Q0 d2 2 2.5 bm25\n"
      "q1 Q0 d3 3 1.5 bm25\n";
  auto lists = ParseRunFile(run, "run", 50);
  ASSERT_EQ(lists.size(), 1u);
  EXPECT_EQ(lists[0].query_id, "q1");
  EXPECT_EQ(lists[0].retriever_name, "bm25");
  EXPECT_EQ(lists[0].doc_ids(), (std::vector<std::string>{"d1", "d2", "d3"}));
  EXPECT_DOUBLE_EQ(lists[0].entries[1].retrieval_score, 2.5);
}

TEST(RunFileTest, OrdersByRankAndTruncatesToDepth) {
  std::string run;
  for (int r = 50; r >= 1; --r) {
    run += "q Q0 d" + std::to_string(r) + " " + std::to_string(r) + " " +
           std::to_string(100 - r) + " t\n";
  }
  auto lists = ParseRunFile(run, "run", 2);
  ASSERT_EQ(lists.size(), 1u);
  EXPECT_EQ(lists[0].doc_ids(), (std::vector<std::string>{"d1", "d2"}));
}

TEST(RunFileTest, DuplicatePairIdentified) {
  const std::string run = "q1 Q0 d1 1 1 t\nq1 Q0 d1 2 0.5 t\n";
  try {
    ParseRunFile(run, "run", 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("q1"), std::string::npos);
    EXPECT_NE(msg.find("d1"), std::string::npos);
  }
}

TEST(RunFileTest, RankGapRejected) {
  EXPECT_THROW(ParseRunFile("q Q0 a 1 1 t\nq Q0 b 3 0 t\n", "run", 10),
               ParseError);
}

TEST(RunFileTest, NonNumericScoreRejected) {
  EXPECT_THROW(ParseRunFile("q Q0 a 1 high t\n", "run", 10), ParseError);
  EXPECT_THROW(ParseRunFile("q Q0 a 1 nan t\n", "run", 10), ParseError);
}

TEST(RunFileTest, WrongColumnCountRejected) {
  EXPECT_THROW(ParseRunFile("q Q0 a 1 1\n", "run", 10), ParseError);
}

TEST(RunFileTest, ZeroDepthRejected) {
  EXPECT_THROW(ParseRunFile("", "run", 0), Error);
}

TEST(RunFileTest, SerializeIsIdentity) {
  const std::string run =
      "q2 Q0 x 1 9.25 dense\n"
      "q2 Q0 y 2 -1 dense\n"
      "q1 Q0 z 1 0.125 dense\n";
  EXPECT_EQ(SerializeRunFile(ParseRunFile(run, "run", 10)), run);
}

TEST(RunFileTest, SerializeIdentityUpToWhitespaceAtDepth) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RankedList> lists;
    for (int q = 0; q < 3; ++q) {
      RankedList list;
      list.query_id = "q" + std::to_string(q);
      list.retriever_name = "r";
      const int n = 1 + static_cast<int>(rng() % 20);
      for (int i = 0; i < n; ++i) {
        list.entries.push_back({"d" + std::to_string(i),
                                static_cast<double>(rng() % 10000) / 7.0});
      }
      lists.push_back(list);
    }
    const std::size_t depth = 1 + rng() % 25;
    const auto parsed = ParseRunFile(SerializeRunFile(lists), "run", depth);
    const auto again = ParseRunFile(SerializeRunFile(parsed), "run", depth);
    EXPECT_EQ(SerializeRunFile(parsed), SerializeRunFile(again));
    for (std::size_t q = 0; q < parsed.size(); ++q) {
      EXPECT_EQ(parsed[q].entries.size(),
                std::min(depth, lists[q].entries.size()));
      for (std::size_t i = 0; i < parsed[q].entries.size(); ++i) {
        EXPECT_EQ(parsed[q].entries[i].retrieval_score,
                  lists[q].entries[i].retrieval_score);
      }
    }
  }
}

}  // namespace
}  // namespace erag
