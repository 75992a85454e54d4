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

#include "erag/ranking_metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "erag/error.hpp"
#include "erag/text.hpp"

namespace erag {
namespace {

void RequireBinary(const RelevanceVector& v, std::string_view metric) {
  if (v.label_kind != LabelKind::kBinary) {
    throw Error(ErrorCode::kUnsupportedLabelKind,
                std::string(metric) + " does not support graded labels");
  }
}

std::size_t Depth(const RelevanceVector& v, Cutoff cutoff) {
  if (v.labels.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "relevance vector for '" + v.query_id + "' is empty");
  }
  return cutoff.Resolve(v.labels.size());
}

bool IsPositive(double label) { return label == 1.0; }

std::size_t CountPositives(std::span<const double> labels) {
  return static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), IsPositive));
}

double Dcg(std::span<const double> gains) {
  double dcg = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    dcg += gains[i] / std::log2(static_cast<double>(i) + 2.0);
  }
  return dcg;
}

}  // namespace

std::string_view SchemeName(AnnotationScheme scheme) {
  switch (scheme) {
    case AnnotationScheme::kErag: return "erag";
    case AnnotationScheme::kContainment: return "containment";
    case AnnotationScheme::kProvenance: return "provenance";
    case AnnotationScheme::kLlmJudge: return "llm_judge";
  }
  return "erag";
}

AnnotationScheme ParseScheme(std::string_view name) {
  if (name == "erag") return AnnotationScheme::kErag;
  if (name == "containment") return AnnotationScheme::kContainment;
  if (name == "provenance") return AnnotationScheme::kProvenance;
  if (name == "llm_judge") return AnnotationScheme::kLlmJudge;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown annotation scheme '" + std::string(name) + "'");
}

std::string_view LabelKindName(LabelKind kind) {
  return kind == LabelKind::kBinary ? "binary" : "graded";
}

LabelKind ParseLabelKind(std::string_view name) {
  if (name == "binary") return LabelKind::kBinary;
  if (name == "graded") return LabelKind::kGraded;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown label kind '" + std::string(name) + "'");
}

void ValidateRelevanceVector(const RelevanceVector& v) {
  for (double label : v.labels) {
    if (!(label >= 0.0 && label <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "label " + FormatDouble(label) + " outside [0,1] for '" +
                      v.query_id + "'");
    }
    if (v.label_kind == LabelKind::kBinary && label != 0.0 && label != 1.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "binary vector for '" + v.query_id + "' holds label " +
                      FormatDouble(label));
    }
  }
}

RelevanceVector Binarize(const RelevanceVector& v, double threshold) {
  RelevanceVector out = v;
  for (auto& label : out.labels) label = label > threshold ? 1.0 : 0.0;
  out.label_kind = LabelKind::kBinary;
  return out;
}

Cutoff Cutoff::At(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "cutoff must be >= 1");
  Cutoff c;
  c.depth_ = k;
  return c;
}

std::size_t Cutoff::Resolve(std::size_t length) const {
  if (!depth_) return length;
  if (*depth_ > length) {
    throw Error(ErrorCode::kInvalidArgument,
                "cutoff " + std::to_string(*depth_) + " exceeds list length " +
                    std::to_string(length));
  }
  return *depth_;
}

std::string Cutoff::ToString() const {
  return depth_ ? std::to_string(*depth_) : std::string("full");
}

std::string_view RankingMetricNameString(RankingMetricName name) {
  switch (name) {
    case RankingMetricName::kPrecision: return "precision";
    case RankingMetricName::kRecall: return "recall";
    case RankingMetricName::kMap: return "map";
    case RankingMetricName::kMrr: return "mrr";
    case RankingMetricName::kNdcg: return "ndcg";
    case RankingMetricName::kHitRatio: return "hit_ratio";
  }
  return "precision";
}

RankingMetric RankingMetric::Parse(std::string_view spec) {
  spec = Trim(spec);
  const auto at = spec.find('@');
  const std::string_view name = spec.substr(0, at);
  RankingMetric metric;
  bool found = false;
  for (auto candidate :
       {RankingMetricName::kPrecision, RankingMetricName::kRecall,
        RankingMetricName::kMap, RankingMetricName::kMrr,
        RankingMetricName::kNdcg, RankingMetricName::kHitRatio}) {
    if (RankingMetricNameString(candidate) == name) {
      metric.name = candidate;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown ranking metric '" + std::string(spec) + "'");
  }
  if (at == std::string_view::npos) return metric;
  const std::string_view depth = spec.substr(at + 1);
  if (depth == "full") return metric;
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(depth.data(), depth.data() + depth.size(), k);
  if (ec != std::errc() || ptr != depth.data() + depth.size() || k == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad cutoff in metric '" + std::string(spec) + "'");
  }
  metric.cutoff = Cutoff::At(k);
  return metric;
}

std::string RankingMetric::ToString() const {
  return std::string(RankingMetricNameString(name)) + "@" + cutoff.ToString();
}

bool RankingMetric::SupportsGraded() const {
  return name == RankingMetricName::kPrecision ||
         name == RankingMetricName::kHitRatio;
}

std::vector<RankingMetric> ParseMetricList(std::string_view specs) {
  std::vector<RankingMetric> metrics;
  std::size_t pos = 0;
  while (pos <= specs.size()) {
    std::size_t end = specs.find(',', pos);
    if (end == std::string_view::npos) end = specs.size();
    const auto item = Trim(specs.substr(pos, end - pos));
    if (!item.empty()) metrics.push_back(RankingMetric::Parse(item));
    pos = end + 1;
  }
  return metrics;
}

double Precision(const RelevanceVector& v, Cutoff cutoff) {
  const std::size_t k = Depth(v, cutoff);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += v.labels[i];
  return sum / static_cast<double>(k);
}

double HitRatio(const RelevanceVector& v, Cutoff cutoff) {
  const std::size_t k = Depth(v, cutoff);
  return *std::max_element(v.labels.begin(), v.labels.begin() + k);
}

double Recall(const RelevanceVector& v, Cutoff cutoff) {
  RequireBinary(v, "recall");
  const std::size_t k = Depth(v, cutoff);
  const std::size_t total = CountPositives(v.labels);
  if (total == 0) return 0.0;
  return static_cast<double>(CountPositives(std::span(v.labels).first(k))) /
         static_cast<double>(total);
}

double AveragePrecision(const RelevanceVector& v, Cutoff cutoff) {
  RequireBinary(v, "map");
  const std::size_t k = Depth(v, cutoff);
  const std::size_t total = CountPositives(v.labels);
  if (total == 0) return 0.0;
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (IsPositive(v.labels[i])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(total);
}

double ReciprocalRank(const RelevanceVector& v, Cutoff cutoff) {
  RequireBinary(v, "mrr");
  const std::size_t k = Depth(v, cutoff);
  for (std::size_t i = 0; i < k; ++i) {
    if (IsPositive(v.labels[i])) return 1.0 / static_cast<double>(i + 1);
  }
  return 0.0;
}

double Ndcg(const RelevanceVector& v, Cutoff cutoff) {
  RequireBinary(v, "ndcg");
  const std::size_t k = Depth(v, cutoff);
  std::vector<double> ideal = v.labels;
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double ideal_dcg = Dcg(std::span(ideal).first(k));
  if (ideal_dcg == 0.0) return 0.0;
  return Dcg(std::span(v.labels).first(k)) / ideal_dcg;
}

double EvaluateMetric(const RelevanceVector& v, const RankingMetric& metric) {
  switch (metric.name) {
    case RankingMetricName::kPrecision: return Precision(v, metric.cutoff);
    case RankingMetricName::kRecall: return Recall(v, metric.cutoff);
    case RankingMetricName::kMap: return AveragePrecision(v, metric.cutoff);
    case RankingMetricName::kMrr: return ReciprocalRank(v, metric.cutoff);
    case RankingMetricName::kNdcg: return Ndcg(v, metric.cutoff);
    case RankingMetricName::kHitRatio: return HitRatio(v, metric.cutoff);
  }
  return 0.0;
}

std::vector<MetricCell> EvaluateList(const RelevanceVector& v,
                                     std::span<const RankingMetric> metrics) {
  std::vector<MetricCell> cells;
  cells.reserve(metrics.size());
  for (const auto& metric : metrics) {
    MetricCell cell{metric, std::nullopt, {}};
    try {
      cell.value = EvaluateMetric(v, metric);
    } catch (const Error& e) {
      cell.skip_reason = e.code() == ErrorCode::kUnsupportedLabelKind
                             ? "unsupported_label_kind"
                             : e.what();
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace erag
