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


#ifndef ERAG_TESTS_TESTING_FIXTURES_HPP_
#define ERAG_TESTS_TESTING_FIXTURES_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "erag/config.hpp"
#include "erag/ingestion.hpp"
#include "erag/mock_backend.hpp"
#include "erag/text.hpp"
#include "erag/types.hpp"
#include "json.hpp"

namespace erag::testing {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("erag-test-" + std::to_string(rd()) + "-" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline std::string Words(std::size_t n, const std::string& stem = "w") {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += stem + std::to_string(i);
  }
  return out;
}

struct SyntheticOptions {
  std::size_t queries = 10;
  std::size_t docs_per_query = 5;
  // Per-query planting probability is drawn from [0, 2 * planted_rate].
  double planted_rate = 0.2;
  std::uint64_t seed = 7;
  std::size_t words_per_doc = 20;
};

// Queries whose gold answer appears only in "planted" documents. The mock
// answers correctly iff at least one planted document is in the prompt.
struct SyntheticSet {
  std::vector<DownstreamExample> examples;
  std::vector<Article> articles;
  std::vector<RankedList> lists;
  std::map<std::string, std::set<std::string>> planted;  // query -> doc ids
  MockOracle oracle;

  DocumentStore Store() const {
    return DocumentStore(SegmentCorpus(articles));
  }
};

inline SyntheticSet MakeSynthetic(const SyntheticOptions& options) {
  SyntheticSet set;
  std::mt19937_64 rng(options.seed);
  for (std::size_t q = 0; q < options.queries; ++q) {
    const std::string qid = "q" + std::to_string(q);
    const std::string answer = "answer" + std::to_string(q);
    const auto rate_permille = static_cast<std::uint64_t>(
        rng() % static_cast<std::uint64_t>(2000 * options.planted_rate + 1));
    DownstreamExample ex;
    ex.query_id = qid;
    ex.query_text = "question " + std::to_string(q);
    ex.gold_outputs = {answer};
    RankedList list;
    list.query_id = qid;
    list.retriever_name = "synthetic";
    for (std::size_t d = 0; d < options.docs_per_query; ++d) {
      const std::string article_id = qid + "d" + std::to_string(d);
      const bool planted = rng() % 1000 < rate_permille;
      std::string body = Words(options.words_per_doc, "x" + article_id + "w");
      if (planted) {
        body += " " + answer;
        set.planted[qid].insert(article_id + "-0");
        ex.provenance_doc_ids.push_back(article_id);
      }
      set.articles.push_back({article_id, "Title " + article_id, body});
      list.entries.push_back(
          {article_id + "-0",
           static_cast<double>(options.docs_per_query - d)});
    }
    if (auto it = set.planted.find(qid); it != set.planted.end()) {
      set.oracle.AddAnyOf({qid, it->second, answer, std::nullopt});
    }
    set.examples.push_back(std::move(ex));
    set.lists.push_back(std::move(list));
  }
  return set;
}

// Writes dataset, corpus, run file and mock oracle into `dir` and returns a
// config pointing at them.
inline RunConfig WriteSynthetic(const SyntheticSet& set,
                                const std::filesystem::path& dir) {
  using nlohmann::json;
  std::string dataset;
  for (const auto& ex : set.examples) {
    json output = json::array();
    json provenance = json::array();
    for (const auto& id : ex.provenance_doc_ids) {
      provenance.push_back({{"wikipedia_id", id}});
    }
    for (const auto& gold : ex.gold_outputs) {
      output.push_back({{"answer", gold}, {"provenance", provenance}});
    }
    dataset += json{{"id", ex.query_id}, {"input", ex.query_text},
                    {"output", output}}
                   .dump() +
               "\n";
  }
  std::string corpus;
  for (const auto& a : set.articles) {
    corpus +=
        json{{"id", a.article_id}, {"title", a.title}, {"text", a.body}}.dump() +
        "\n";
  }
  std::string oracle;
  for (const auto& [qid, docs] : set.planted) {
    oracle += json{{"query_id", qid},
                   {"doc_ids", docs},
                   {"answer", set.examples[std::stoul(qid.substr(1))]
                                  .gold_outputs.front()},
                   {"match", "any"}}
                  .dump() +
              "\n";
  }
  WriteFileAtomic(dir / "dataset.jsonl", dataset);
  WriteFileAtomic(dir / "corpus.jsonl", corpus);
  WriteFileAtomic(dir / "run.txt", SerializeRunFile(set.lists));
  WriteFileAtomic(dir / "oracle.jsonl", oracle);

  RunConfig config;
  config.base_dir = dir;
  config.dataset_path = "dataset.jsonl";
  config.corpus_path = "corpus.jsonl";
  config.run_path = "run.txt";
  config.depth = set.lists.empty() ? 1 : set.lists.front().entries.size();
  config.metrics = ParseMetricList(
      "precision@full,recall@full,map@full,mrr@full,ndcg@full,hit_ratio@full");
  config.backend.kind = "mock";
  config.backend.mock_oracle = "oracle.jsonl";
  config.cache_dir = (dir / "cache").string();
  config.out_dir = (dir / "out").string();
  return config;
}

}  // namespace erag::testing

#endif  // ERAG_TESTS_TESTING_FIXTURES_HPP_
