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

#include "erag/records.hpp"

#include "erag/error.hpp"
#include "erag/text.hpp"
#include "json.hpp"

namespace erag {
namespace {

using nlohmann::ordered_json;

ordered_json CostToJson(const CostRecord& cost) {
  return {{"prompt_tokens", cost.prompt_tokens},
          {"output_tokens", cost.output_tokens},
          {"simulated_flops", cost.simulated_flops}};
}

CostRecord CostFromJson(const ordered_json& j) {
  CostRecord cost;
  cost.prompt_tokens = j.at("prompt_tokens").get<std::uint64_t>();
  cost.output_tokens = j.at("output_tokens").get<std::uint64_t>();
  cost.simulated_flops = j.at("simulated_flops").get<double>();
  return cost;
}

template <typename Fn>
auto Parsing(std::string_view what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                "malformed " + std::string(what) + " record: " + e.what());
  }
}

}  // namespace

std::string AnnotationToJson(const AnnotationResult& a) {
  ordered_json labels = ordered_json::array();
  for (const auto& l : a.labels) {
    labels.push_back(l ? ordered_json(*l) : ordered_json(nullptr));
  }
  ordered_json j = {
      {"query_id", a.query_id},
      {"scheme", SchemeName(a.scheme)},
      {"doc_ids", a.doc_ids},
      {"labels", labels},
      {"label_kind", LabelKindName(a.label_kind)},
      {"backend_id", a.backend_id},
      {"template_id", a.template_id},
      {"parse_failures", a.parse_failures},
      {"cost", CostToJson(a.cost)},
  };
  return j.dump();
}

AnnotationResult AnnotationFromJson(std::string_view line) {
  return Parsing("annotation", [&] {
    const auto j = ordered_json::parse(line);
    AnnotationResult a;
    a.query_id = j.at("query_id").get<std::string>();
    a.scheme = ParseScheme(j.at("scheme").get<std::string>());
    a.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
    for (const auto& l : j.at("labels")) {
      a.labels.push_back(l.is_null() ? std::nullopt
                                     : std::optional<double>(l.get<double>()));
    }
    if (a.labels.size() != a.doc_ids.size()) {
      throw Error(ErrorCode::kParseError,
                  "annotation for " + a.query_id + ": labels and doc_ids differ");
    }
    a.label_kind = ParseLabelKind(j.at("label_kind").get<std::string>());
    a.backend_id = j.at("backend_id").get<std::string>();
    a.template_id = j.at("template_id").get<std::string>();
    a.parse_failures = j.at("parse_failures").get<std::size_t>();
    a.cost = CostFromJson(j.at("cost"));
    return a;
  });
}

std::string E2EToJson(const E2EResult& r, std::string_view backend_id,
                      std::string_view template_id) {
  ordered_json j = {
      {"query_id", r.query_id},
      {"generated", r.generated},
      {"score", r.downstream_score},
      {"k_used", r.k_used},
      {"truncated", r.truncated},
      {"cost", CostToJson(r.cost)},
      {"backend_id", backend_id},
      {"template_id", template_id},
  };
  return j.dump();
}

E2EResult E2EFromJson(std::string_view line) {
  return Parsing("e2e", [&] {
    const auto j = ordered_json::parse(line);
    E2EResult r;
    r.query_id = j.at("query_id").get<std::string>();
    r.generated = j.at("generated").get<std::string>();
    r.downstream_score = j.at("score").get<double>();
    r.k_used = j.at("k_used").get<std::size_t>();
    r.truncated = j.at("truncated").get<bool>();
    r.cost = CostFromJson(j.at("cost"));
    return r;
  });
}

std::string RetrievalScoreToJson(const RetrievalScoreRow& row) {
  ordered_json scores = ordered_json::object();
  ordered_json skipped = ordered_json::object();
  for (const auto& cell : row.cells) {
    const std::string key = cell.metric.ToString();
    if (cell.value) {
      scores[key] = *cell.value;
    } else {
      scores[key] = nullptr;
      skipped[key] = cell.skip_reason;
    }
  }
  ordered_json j = {
      {"query_id", row.query_id},
      {"scheme", SchemeName(row.scheme)},
      {"label_kind", LabelKindName(row.label_kind)},
      {"scores", scores},
      {"skipped", skipped},
  };
  return j.dump();
}

RetrievalScoreRow RetrievalScoreFromJson(std::string_view line) {
  return Parsing("retrieval score", [&] {
    const auto j = ordered_json::parse(line);
    RetrievalScoreRow row;
    row.query_id = j.at("query_id").get<std::string>();
    row.scheme = ParseScheme(j.at("scheme").get<std::string>());
    row.label_kind = ParseLabelKind(j.at("label_kind").get<std::string>());
    const auto& skipped = j.at("skipped");
    for (const auto& [key, value] : j.at("scores").items()) {
      MetricCell cell{RankingMetric::Parse(key), std::nullopt, {}};
      if (value.is_null()) {
        cell.skip_reason = skipped.value(key, std::string("skipped"));
      } else {
        cell.value = value.get<double>();
      }
      row.cells.push_back(std::move(cell));
    }
    return row;
  });
}

template <typename T>
std::vector<T> ReadJsonl(const std::filesystem::path& path,
                         T (*parse)(std::string_view)) {
  const std::string contents = ReadFile(path);
  std::vector<T> out;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string::npos) end = contents.size();
    ++line_number;
    const std::string_view line =
        Trim(std::string_view(contents).substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    try {
      out.push_back(parse(line));
    } catch (const Error& e) {
      throw ParseError(path.string(), line_number, e.what());
    }
  }
  return out;
}

template std::vector<AnnotationResult> ReadJsonl(
    const std::filesystem::path&, AnnotationResult (*)(std::string_view));
template std::vector<E2EResult> ReadJsonl(const std::filesystem::path&,
                                          E2EResult (*)(std::string_view));
template std::vector<RetrievalScoreRow> ReadJsonl(
    const std::filesystem::path&, RetrievalScoreRow (*)(std::string_view));

}  // namespace erag
