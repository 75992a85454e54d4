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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#include "erag/error.hpp"
#include "erag/text.hpp"
#include "json.hpp"

namespace erag {
namespace {

using nlohmann::json;

// Calls fn(line_number, line) for every non-blank line.
template <typename Fn>
void ForEachLine(std::string_view contents, Fn&& fn) {
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    ++line_number;
    std::string_view line = contents.substr(pos, end - pos);
    if (!Trim(line).empty()) fn(line_number, line);
    pos = end + 1;
  }
}

std::string IdString(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number_unsigned()) {
    return std::to_string(value.get<unsigned long long>());
  }
  throw std::invalid_argument("identifier must be a string or integer");
}

void PushUnique(std::vector<std::string>& out, std::string value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) {
    out.push_back(std::move(value));
  }
}

}  // namespace

std::string_view TaskTypeName(TaskType task) {
  switch (task) {
    case TaskType::kExtractiveQa: return "extractive_qa";
    case TaskType::kClassification: return "classification";
    case TaskType::kLongForm: return "long_form";
  }
  return "extractive_qa";
}

TaskType ParseTaskType(std::string_view name) {
  if (name == "extractive_qa") return TaskType::kExtractiveQa;
  if (name == "classification") return TaskType::kClassification;
  if (name == "long_form") return TaskType::kLongForm;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown task type '" + std::string(name) + "'");
}

std::vector<std::string> RankedList::doc_ids() const {
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (const auto& e : entries) ids.push_back(e.doc_id);
  return ids;
}

DatasetLoad ParseKiltJsonl(std::string_view contents,
                           const std::string& source_name,
                           const DatasetOptions& options) {
  if (options.task == TaskType::kClassification && options.label_set.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "classification datasets require a label set");
  }
  DatasetLoad result;
  std::unordered_set<std::string> seen;
  ForEachLine(contents, [&](std::size_t line_number, std::string_view line) {
    DownstreamExample example;
    example.task = options.task;
    try {
      const json record = json::parse(line);
      if (!record.is_object()) throw std::invalid_argument("not an object");
      if (!record.contains("id")) throw std::invalid_argument("missing 'id'");
      if (!record.contains("input") || !record["input"].is_string()) {
        throw std::invalid_argument("missing string field 'input'");
      }
      if (!record.contains("output") || !record["output"].is_array()) {
        throw std::invalid_argument("missing array field 'output'");
      }
      example.query_id = IdString(record["id"]);
      example.query_text = record["input"].get<std::string>();
      for (const auto& out : record["output"]) {
        if (!out.is_object()) throw std::invalid_argument("output not object");
        if (auto it = out.find("answer"); it != out.end() && it->is_string()) {
          PushUnique(example.gold_outputs, it->get<std::string>());
        }
        if (auto it = out.find("provenance");
            it != out.end() && it->is_array()) {
          for (const auto& prov : *it) {
            if (prov.is_object() && prov.contains("wikipedia_id")) {
              PushUnique(example.provenance_doc_ids,
                         IdString(prov["wikipedia_id"]));
            }
          }
        }
      }
    } catch (const json::exception& e) {
      throw ParseError(source_name, line_number, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(source_name, line_number, e.what());
    }

    if (example.gold_outputs.empty()) {
      result.warnings.push_back(source_name + ":" +
                                std::to_string(line_number) + ": record '" +
                                example.query_id +
                                "' has no gold output; skipped");
      return;
    }
    if (options.task == TaskType::kClassification) {
      for (const auto& gold : example.gold_outputs) {
        if (std::find(options.label_set.begin(), options.label_set.end(),
                      gold) == options.label_set.end()) {
          result.warnings.push_back(source_name + ":" +
                                    std::to_string(line_number) + ": label '" +
                                    gold + "' outside the label set; skipped");
          return;
        }
      }
    }
    if (!seen.insert(example.query_id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  source_name + ":" + std::to_string(line_number) +
                      ": duplicate query id '" + example.query_id + "'");
    }
    result.examples.push_back(std::move(example));
  });
  return result;
}

DatasetLoad LoadDataset(const std::filesystem::path& path, DatasetFormat format,
                        const DatasetOptions& options) {
  switch (format) {
    case DatasetFormat::kKiltJsonl:
      return ParseKiltJsonl(ReadFile(path), path.string(), options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown dataset format");
}

std::vector<Article> ParseArticlesJsonl(std::string_view contents,
                                        const std::string& source_name) {
  std::vector<Article> articles;
  ForEachLine(contents, [&](std::size_t line_number, std::string_view line) {
    try {
      const json record = json::parse(line);
      Article article;
      article.article_id = IdString(record.at("id"));
      article.title = record.value("title", std::string());
      article.body = record.at("text").get<std::string>();
      articles.push_back(std::move(article));
    } catch (const json::exception& e) {
      throw ParseError(source_name, line_number, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(source_name, line_number, e.what());
    }
  });
  return articles;
}

std::vector<Article> LoadArticles(const std::filesystem::path& path) {
  return ParseArticlesJsonl(ReadFile(path), path.string());
}

std::vector<Document> SegmentArticle(const Article& article,
                                     const SegmentationOptions& options) {
  if (options.max_words == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_words must be positive");
  }
  const auto words = SplitWhitespace(article.body);
  std::vector<Document> passages;
  passages.reserve((words.size() + options.max_words - 1) / options.max_words);
  for (std::size_t start = 0; start < words.size();
       start += options.max_words) {
    const std::size_t end = std::min(words.size(), start + options.max_words);
    std::string passage;
    for (std::size_t i = start; i < end; ++i) {
      if (i > start) passage.push_back(' ');
      passage.append(words[i]);
    }
    Document doc;
    doc.doc_id = article.article_id + "-" + std::to_string(passages.size());
    doc.title = article.title;
    doc.text = article.title.empty()
                   ? std::move(passage)
                   : article.title + options.separator + passage;
    doc.source_article_id = article.article_id;
    passages.push_back(std::move(doc));
  }
  return passages;
}

void SegmentCorpus(std::span<const Article> articles,
                   const SegmentationOptions& options,
                   const std::function<void(Document&&)>& sink) {
  for (const auto& article : articles) {
    for (auto& doc : SegmentArticle(article, options)) sink(std::move(doc));
  }
}

std::vector<Document> SegmentCorpus(std::span<const Article> articles,
                                    const SegmentationOptions& options) {
  std::vector<Document> docs;
  SegmentCorpus(articles, options,
                [&docs](Document&& doc) { docs.push_back(std::move(doc)); });
  return docs;
}

std::string_view PassageBody(const Document& doc,
                             const SegmentationOptions& options) {
  std::string_view text = doc.text;
  if (doc.title.empty()) return text;
  const std::string prefix = doc.title + options.separator;
  if (text.substr(0, prefix.size()) == prefix) text.remove_prefix(prefix.size());
  return text;
}

DocumentStore::DocumentStore(std::vector<Document> docs) {
  docs_.reserve(docs.size());
  for (auto& doc : docs) Add(std::move(doc));
}

void DocumentStore::Add(Document doc) {
  if (Trim(doc.text).empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "document '" + doc.doc_id + "' has empty text");
  }
  std::string id = doc.doc_id;
  if (!docs_.emplace(id, std::move(doc)).second) {
    throw Error(ErrorCode::kDuplicateId, "duplicate document id '" + id + "'");
  }
}

const Document* DocumentStore::Find(std::string_view doc_id) const {
  auto it = docs_.find(std::string(doc_id));
  return it == docs_.end() ? nullptr : &it->second;
}

std::vector<RankedList> ParseRunFile(std::string_view contents,
                                     const std::string& source_name,
                                     std::size_t depth) {
  if (depth == 0) {
    throw Error(ErrorCode::kInvalidArgument, "run depth must be positive");
  }
  struct Row {
    std::string doc_id;
    long long rank;
    double score;
    std::size_t line;
  };
  struct Pending {
    std::string tag;
    std::vector<Row> rows;
    std::set<std::string> doc_ids;
  };
  std::vector<std::string> order;
  std::map<std::string, Pending> by_query;

  ForEachLine(contents, [&](std::size_t line_number, std::string_view line) {
    const auto cols = SplitWhitespace(line);
    if (cols.size() != 6) {
      throw ParseError(source_name, line_number,
                       "expected 6 columns, found " +
                           std::to_string(cols.size()));
    }
    Row row{std::string(cols[2]), 0, 0.0, line_number};
    {
      auto [ptr, ec] = std::from_chars(cols[3].data(),
                                       cols[3].data() + cols[3].size(),
                                       row.rank);
      if (ec != std::errc() || ptr != cols[3].data() + cols[3].size() ||
          row.rank < 1) {
        throw ParseError(source_name, line_number,
                         "rank '" + std::string(cols[3]) +
                             "' is not a positive integer");
      }
    }
    {
      auto [ptr, ec] = std::from_chars(cols[4].data(),
                                       cols[4].data() + cols[4].size(),
                                       row.score);
      if (ec != std::errc() || ptr != cols[4].data() + cols[4].size() ||
          !std::isfinite(row.score)) {
        throw ParseError(source_name, line_number,
                         "score '" + std::string(cols[4]) +
                             "' is not numeric");
      }
    }
    const std::string qid(cols[0]);
    auto [it, inserted] = by_query.try_emplace(qid);
    if (inserted) {
      order.push_back(qid);
      it->second.tag = std::string(cols[5]);
    }
    if (!it->second.doc_ids.insert(row.doc_id).second) {
      throw ParseError(source_name, line_number,
                       "duplicate (query, document) pair (" + qid + ", " +
                           row.doc_id + ")");
    }
    it->second.rows.push_back(std::move(row));
  });

  std::vector<RankedList> lists;
  lists.reserve(order.size());
  for (const auto& qid : order) {
    auto& pending = by_query[qid];
    std::stable_sort(pending.rows.begin(), pending.rows.end(),
                     [](const Row& a, const Row& b) { return a.rank < b.rank; });
    for (std::size_t i = 0; i < pending.rows.size(); ++i) {
      if (pending.rows[i].rank != static_cast<long long>(i + 1)) {
        throw ParseError(source_name, pending.rows[i].line,
                         "query " + qid + ": expected rank " +
                             std::to_string(i + 1) + ", found " +
                             std::to_string(pending.rows[i].rank));
      }
    }
    RankedList list;
    list.query_id = qid;
    list.retriever_name = pending.tag;
    const std::size_t keep = std::min(depth, pending.rows.size());
    list.entries.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
      list.entries.push_back(
          {std::move(pending.rows[i].doc_id), pending.rows[i].score});
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

std::vector<RankedList> LoadRunFile(const std::filesystem::path& path,
                                    std::size_t depth) {
  return ParseRunFile(ReadFile(path), path.string(), depth);
}

std::string SerializeRunFile(std::span<const RankedList> lists) {
  std::string out;
  for (const auto& list : lists) {
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      out += list.query_id;
      out += " Q0 ";
      out += list.entries[i].doc_id;
      out += ' ';
      out += std::to_string(i + 1);
      out += ' ';
      out += FormatDouble(list.entries[i].retrieval_score);
      out += ' ';
      out += list.retriever_name;
      out += '\n';
    }
  }
  return out;
}

}  // namespace erag
