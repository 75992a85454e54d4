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

#ifndef ERAG_INGESTION_HPP_
#define ERAG_INGESTION_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "erag/types.hpp"

namespace erag {

enum class DatasetFormat { kKiltJsonl };

struct DatasetOptions {
  TaskType task = TaskType::kExtractiveQa;
  // Required for classification datasets; records whose answers fall
  // outside it are rejected.
  std::vector<std::string> label_set;
};

struct DatasetLoad {
  std::vector<DownstreamExample> examples;
  std::vector<std::string> warnings;  // one per skipped record
};

// Loads a KILT-style JSONL file: {"id", "input", "output": [{"answer",
// "provenance": [{"wikipedia_id"}]}]}. Malformed lines throw ParseError;
// records without any answer are skipped with a warning.
DatasetLoad LoadDataset(const std::filesystem::path& path, DatasetFormat format,
                        const DatasetOptions& options = {});
DatasetLoad ParseKiltJsonl(std::string_view contents,
                           const std::string& source_name,
                           const DatasetOptions& options = {});

struct Article {
  std::string article_id;
  std::string title;
  std::string body;
};

// Corpus JSONL: {"id", "title", "text"} per article.
std::vector<Article> LoadArticles(const std::filesystem::path& path);
std::vector<Article> ParseArticlesJsonl(std::string_view contents,
                                        const std::string& source_name);

struct SegmentationOptions {
  std::size_t max_words = 100;
  std::string separator = " ";
};

// Splits the body into consecutive passages of at most `max_words`
// whitespace tokens. Passage i of article A gets doc_id "A-i".
std::vector<Document> SegmentArticle(const Article& article,
                                     const SegmentationOptions& options = {});

void SegmentCorpus(std::span<const Article> articles,
                   const SegmentationOptions& options,
                   const std::function<void(Document&&)>& sink);
std::vector<Document> SegmentCorpus(std::span<const Article> articles,
                                    const SegmentationOptions& options = {});

// Inverse of the title prefixing done by SegmentArticle.
std::string_view PassageBody(const Document& doc,
                             const SegmentationOptions& options = {});

// Lookup table over documents; rejects duplicate ids.
class DocumentStore {
 public:
  DocumentStore() = default;
  explicit DocumentStore(std::vector<Document> docs);

  void Add(Document doc);
  const Document* Find(std::string_view doc_id) const;
  std::size_t size() const { return docs_.size(); }

 private:
  std::unordered_map<std::string, Document> docs_;
};

// Six-column run format: "qid Q0 docid rank score tag". Lists are ordered by
// rank and truncated to `depth` entries; the tag becomes retriever_name.
std::vector<RankedList> LoadRunFile(const std::filesystem::path& path,
                                    std::size_t depth);
std::vector<RankedList> ParseRunFile(std::string_view contents,
                                     const std::string& source_name,
                                     std::size_t depth);

std::string SerializeRunFile(std::span<const RankedList> lists);

}  // namespace erag

#endif  // ERAG_INGESTION_HPP_
