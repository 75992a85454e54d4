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


#include "erag/downstream_metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "erag/error.hpp"
#include "testing/oracles.hpp"

namespace erag {
namespace {

using Golds = std::vector<std::string>;

TEST(NormalizeTest, DefaultPolicy) {
  EXPECT_EQ(Normalize("The  Eiffel Tower!", {}), "eiffel tower");
  EXPECT_EQ(Normalize("an apple, a day", {}), "apple day");
  EXPECT_EQ(Normalize("new-york", {}), "new york");
  EXPECT_EQ(Normalize("theory", {}), "theory");
  EXPECT_EQ(Normalize("  ", {}), "");
}

TEST(NormalizeTest, NonePolicyIsIdentity) {
  EXPECT_EQ(Normalize("The  Cat.", NormalizationPolicy::None()), "The  Cat.");
}

TEST(NormalizeTest, IdempotentUnderAllPolicies) {
  std::mt19937 rng(3);
  const std::string alphabet = "aAnThe  .,-!'\tbcXyz";
  for (int mask = 0; mask < 16; ++mask) {
    NormalizationPolicy policy{(mask & 1) != 0, (mask & 2) != 0,
                               (mask & 4) != 0, (mask & 8) != 0};
    for (int trial = 0; trial < 200; ++trial) {
      std::string s;
      const int len = static_cast<int>(rng() % 30);
      for (int i = 0; i < len; ++i) {
        if (rng() % 6 == 0) {
          static const char* words[] = {" the ", " a ", " An ", " THE "};
          s += words[rng() % 4];
        } else {
          s += alphabet[rng() % alphabet.size()];
        }
      }
      const std::string once = Normalize(s, policy);
      EXPECT_EQ(Normalize(once, policy), once) << "input '" << s << "'";
    }
  }
}

TEST(ExactMatchTest, Examples) {
  EXPECT_EQ(ExactMatch("The Eiffel Tower", Golds{"eiffel tower"}), 1.0);
  EXPECT_EQ(ExactMatch("Paris, France", Golds{"Paris"}), 0.0);
  EXPECT_EQ(ExactMatch("", Golds{"x"}), 0.0);
  EXPECT_EQ(ExactMatch("b", Golds{"a", "B"}), 1.0);
}

TEST(AccuracyTest, Examples) {
  const Golds labels{"SUPPORTS", "REFUTES"};
  EXPECT_EQ(Accuracy("SUPPORTS", Golds{"SUPPORTS"}, labels), 1.0);
  EXPECT_EQ(Accuracy("REFUTES", Golds{"SUPPORTS"}, labels), 0.0);
  EXPECT_EQ(Accuracy("maybe", Golds{"SUPPORTS"}, labels), 0.0);
  EXPECT_EQ(Accuracy("supports.", Golds{"SUPPORTS"}, labels), 1.0);
}

TEST(UnigramF1Test, Examples) {
  EXPECT_DOUBLE_EQ(UnigramF1("the cat sat", Golds{"cat sat"}), 1.0);
  NormalizationPolicy keep_articles;
  keep_articles.strip_articles = false;
  const double f1 = UnigramF1("a b c", Golds{"b c d"}, keep_articles);
  EXPECT_DOUBLE_EQ(f1, testing::OracleF1("a b c", "b c d"));
  EXPECT_NEAR(f1, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(UnigramF1("", Golds{""}), 1.0);
  EXPECT_EQ(UnigramF1("", Golds{"x"}), 0.0);
  EXPECT_EQ(UnigramF1("x", Golds{""}), 0.0);
}

TEST(UnigramF1Test, MultisetCounts) {
  NormalizationPolicy p = NormalizationPolicy::None();
  EXPECT_DOUBLE_EQ(UnigramF1("x x y", Golds{"x y y"}, p),
                   testing::OracleF1("x x y", "x y y"));
}

TEST(UnigramF1Test, EmptyGoldListRejected) {
  EXPECT_THROW(UnigramF1("x", Golds{}), Error);
}

class MetricPropertyTest : public ::testing::Test {
 protected:
  std::string RandomText(std::mt19937& rng) {
    static const std::vector<std::string> vocab = {
        "the", "a", "Paris", "paris,", "cat", "sat", "New", "york", "x", "b"};
    std::string s;
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += vocab[rng() % vocab.size()];
    }
    return s;
  }
};

TEST_F(MetricPropertyTest, RangeSelfIdentityGoldMaxAndEmImpliesF1) {
  std::mt19937 rng(9);
  const Golds label_set{"paris", "cat sat", "x"};
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string gen = RandomText(rng);
    Golds golds;
    const int ng = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ng; ++i) golds.push_back(RandomText(rng));

    const double em = ExactMatch(gen, golds);
    const double f1 = UnigramF1(gen, golds);
    EXPECT_TRUE(em == 0.0 || em == 1.0);
    EXPECT_GE(f1, 0.0);
    EXPECT_LE(f1, 1.0);
    if (em == 1.0) {
      EXPECT_EQ(f1, 1.0);
    }

    double em_max = 0.0, f1_max = 0.0;
    for (const auto& g : golds) {
      em_max = std::max(em_max, ExactMatch(gen, Golds{g}));
      f1_max = std::max(f1_max, UnigramF1(gen, Golds{g}));
    }
    EXPECT_EQ(em, em_max);
    EXPECT_EQ(f1, f1_max);

    const NormalizationPolicy policy;
    double oracle = 0.0;
    for (const auto& g : golds) {
      oracle = std::max(oracle, testing::OracleF1(Normalize(gen, policy),
                                                  Normalize(g, policy)));
    }
    EXPECT_NEAR(f1, oracle, 1e-12);

    if (!gen.empty()) {
      EXPECT_EQ(ExactMatch(gen, Golds{gen}), 1.0);
      EXPECT_EQ(UnigramF1(gen, Golds{gen}), 1.0);
    }
    const double acc = Accuracy(gen, golds, label_set);
    EXPECT_TRUE(acc == 0.0 || acc == 1.0);
  }
}

TEST(DownstreamMetricTest, NamesAndKinds) {
  for (auto kind : {DownstreamMetricKind::kExactMatch,
                    DownstreamMetricKind::kAccuracy,
                    DownstreamMetricKind::kUnigramF1}) {
    EXPECT_EQ(ParseDownstreamMetric(DownstreamMetricName(kind)), kind);
  }
  EXPECT_THROW(ParseDownstreamMetric("bleu"), Error);
  EXPECT_TRUE(DownstreamMetric(DownstreamMetricKind::kExactMatch).is_binary());
  EXPECT_FALSE(DownstreamMetric(DownstreamMetricKind::kUnigramF1).is_binary());
  EXPECT_THROW(DownstreamMetric(DownstreamMetricKind::kAccuracy), Error);
  DownstreamMetric acc(DownstreamMetricKind::kAccuracy, {},
                       {"SUPPORTS", "REFUTES"});
  EXPECT_EQ(acc.Score("refutes", Golds{"REFUTES"}), 1.0);
}

}  // namespace
}  // namespace erag
